// Copyright 2026 The qlr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the qlr library.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns a qlr_status; on failure qlr_last_error_message()
 * describes the error for the calling thread. Strings returned through
 * char ** out-parameters are owned by the caller and released with
 * qlr_string_free(). Pointer out-parameters are set to NULL on entry and
 * stay NULL when the call fails. Status values double as the CLI exit codes.
 */
#ifndef QLR_QLR_H_
#define QLR_QLR_H_

#include <stddef.h>

#if defined(_WIN32)
#define QLR_API __declspec(dllexport)
#else
#define QLR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qlr_status {
    QLR_OK = 0,
    QLR_ERR_INVALID_ARGUMENT = 1,
    QLR_ERR_PARSE = 2,
    QLR_ERR_CONDITIONING = 3,
    QLR_ERR_POSTSELECTION = 4,
    QLR_ERR_DIMENSION = 5,
    QLR_ERR_NOT_UNITARY = 6,
    QLR_ERR_NOT_HERMITIAN = 7,
    QLR_ERR_IO = 8,
    QLR_ERR_INTERNAL = 9,
    QLR_ERR_BELOW_THRESHOLD = 10
} qlr_status;

typedef struct qlr_matrix qlr_matrix;
typedef struct qlr_gene_string qlr_gene_string;

QLR_API const char *qlr_version(void);
QLR_API const char *qlr_status_name(qlr_status status);
/* Message of the last failed call on this thread, or "". */
QLR_API const char *qlr_last_error_message(void);
QLR_API void qlr_string_free(char *s);

/* Matrix JSON file: {"dim": n, "entries": [[re, im], ...]}. */
QLR_API qlr_status qlr_matrix_load(const char *path, qlr_matrix **out);
QLR_API qlr_status qlr_matrix_from_json(const char *json, qlr_matrix **out);
/* "paperA" or "expA16". */
QLR_API qlr_status qlr_matrix_builtin(const char *name, qlr_matrix **out);
QLR_API qlr_status qlr_matrix_dim(const qlr_matrix *m, size_t *out);
QLR_API qlr_status qlr_matrix_to_json(const qlr_matrix *m, char **out);
QLR_API void qlr_matrix_free(qlr_matrix *m);

QLR_API qlr_status qlr_trace_fidelity(const qlr_matrix *approx, const qlr_matrix *target, double *out);
QLR_API qlr_status qlr_hs_distance(const qlr_matrix *a, const qlr_matrix *b, double *out);

QLR_API qlr_status qlr_gene_string_parse(const char *text, qlr_gene_string **out);
QLR_API qlr_status qlr_gene_string_load(const char *path, qlr_gene_string **out);
QLR_API qlr_status qlr_gene_string_save(const qlr_gene_string *gs, const char *path);
QLR_API qlr_status qlr_gene_string_to_text(const qlr_gene_string *gs, char **out);
QLR_API qlr_status qlr_gene_string_unitary(const qlr_gene_string *gs, qlr_matrix **out);
QLR_API void qlr_gene_string_free(qlr_gene_string *gs);

/* Runs GLOA on `target`. `params_json` may be NULL; its keys are groups,
 * members, max_gates, gate_set, r1, r2, r3, fidelity_threshold,
 * max_iterations and seed. `summary_json` (optional) receives fidelity,
 * fidelity_before_refine, iterations and seed. */
QLR_API qlr_status qlr_approximate(const qlr_matrix *target, const char *params_json, int refine,
                                   qlr_gene_string **out, char **summary_json);
QLR_API qlr_status qlr_refine(qlr_gene_string *gs, const qlr_matrix *target);

/* Exact circuit for exp(i·a·theta) as a gene string; exp(i·a·theta) equals
 * e^{i·global_phase} times the string's unitary. */
QLR_API qlr_status qlr_pauli_gene_string(const qlr_matrix *a, double theta, qlr_gene_string **out,
                                         double *global_phase);

/* Solves the dataset or matrix at `input_path`. `config_json` and
 * `overrides_json` may be NULL; override keys win. The report is produced
 * even when postselection fails, in which case QLR_ERR_POSTSELECTION is
 * returned. */
QLR_API qlr_status qlr_solve(const char *input_path, const char *config_json, const char *overrides_json,
                             char **report_json);

/* Clock distribution after phase estimation on eigenvector `j` (ascending
 * eigenvalues), as a JSON object. */
QLR_API qlr_status qlr_verify_qpe(const qlr_matrix *a, size_t j, const char *config_json, char **out);

QLR_API qlr_status qlr_emit_plot(const char *report_json, char **csv);

#ifdef __cplusplus
}
#endif

#endif /* QLR_QLR_H_ */
