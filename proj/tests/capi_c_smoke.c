/* Copyright 2026 The qlr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <math.h>
#include <stdio.h>

#include "qlr/qlr.h"

static int check(qlr_status s, const char *what) {
    if (s != QLR_OK) {
        fprintf(stderr, "%s: %s (%s)\n", what, qlr_status_name(s), qlr_last_error_message());
        return 1;
    }
    return 0;
}

int main(void) {
    qlr_matrix *a = NULL;
    qlr_matrix *target = NULL;
    qlr_matrix *u = NULL;
    qlr_gene_string *gs = NULL;
    double phase = 0.0;
    double fidelity = 0.0;
    int failed = 0;

    failed |= check(qlr_matrix_builtin("paperA", &a), "builtin paperA");
    failed |= check(qlr_matrix_builtin("expA16", &target), "builtin expA16");
    failed |= check(qlr_pauli_gene_string(a, 2.0 * 3.14159265358979323846 / 16.0, &gs, &phase), "pauli");
    failed |= check(qlr_gene_string_unitary(gs, &u), "unitary");
    failed |= check(qlr_trace_fidelity(u, target, &fidelity), "fidelity");
    if (!failed && fabs(fidelity - 1.0) > 1e-12) {
        fprintf(stderr, "fidelity %.17g\n", fidelity);
        failed = 1;
    }
    qlr_matrix_free(u);
    if (qlr_matrix_builtin("missing", &u) != QLR_ERR_INVALID_ARGUMENT || u != NULL) {
        failed = 1;
    }
    qlr_gene_string_free(gs);
    qlr_matrix_free(target);
    qlr_matrix_free(a);
    printf("%s\n", failed ? "capi_c_smoke: FAIL" : "capi_c_smoke: ok");
    return failed;
}
