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

#include "qlr/qlr.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "json.hpp"
#include "qlr/error.h"
#include "qlr/gloa.h"
#include "qlr/hhl.h"
#include "qlr/pauli_exponential.h"
#include "qlr/pipeline.h"

struct qlr_matrix {
    qlr::DenseMatrix m;
};

struct qlr_gene_string {
    qlr::gloa::GeneString gs;
};

namespace {

thread_local std::string last_error;

qlr_status fail(qlr_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <typename T>
void clear(T **out) {
    if (out) {
        *out = nullptr;
    }
}

template <typename F>
qlr_status guarded(F &&body) {
    try {
        last_error.clear();
        return body();
    } catch (const qlr::Error &e) {
        return fail(static_cast<qlr_status>(e.code()), e.what());
    } catch (const nlohmann::json::exception &e) {
        return fail(QLR_ERR_PARSE, e.what());
    } catch (const std::bad_alloc &) {
        return fail(QLR_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(QLR_ERR_INTERNAL, e.what());
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

nlohmann::json parse_optional(const char *json) {
    if (json == nullptr || *json == '\0') {
        return nlohmann::json::object();
    }
    try {
        return nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception &e) {
        throw qlr::Error(qlr::ErrorCode::kParse, e.what());
    }
}

void require(const void *p, const char *what) {
    if (p == nullptr) {
        throw qlr::Error(qlr::ErrorCode::kInvalidArgument, std::string(what) + " must not be null");
    }
}

}  // namespace

extern "C" {

const char *qlr_version(void) {
    return "0.1.0";
}

const char *qlr_status_name(qlr_status status) {
    if (status == QLR_OK) {
        return "ok";
    }
    if (status == QLR_ERR_BELOW_THRESHOLD) {
        return "below_threshold";
    }
    if (status < QLR_OK || status > QLR_ERR_BELOW_THRESHOLD) {
        return "unknown";
    }
    return qlr::error_code_name(static_cast<qlr::ErrorCode>(status));
}

const char *qlr_last_error_message(void) {
    return last_error.c_str();
}

void qlr_string_free(char *s) {
    std::free(s);
}

qlr_status qlr_matrix_from_json(const char *json, qlr_matrix **out) {
    clear(out);
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        auto j = parse_optional(json);
        *out = new qlr_matrix{qlr::matrix_from_json(j)};
        return QLR_OK;
    });
}

qlr_status qlr_matrix_load(const char *path, qlr_matrix **out) {
    clear(out);
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        std::ifstream in(path);
        if (!in) {
            throw qlr::Error(qlr::ErrorCode::kIo, std::string("cannot open '") + path + "'");
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception &e) {
            throw qlr::Error(qlr::ErrorCode::kParse, std::string(path) + ": " + e.what());
        }
        *out = new qlr_matrix{qlr::matrix_from_json(j)};
        return QLR_OK;
    });
}

qlr_status qlr_matrix_builtin(const char *name, qlr_matrix **out) {
    clear(out);
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = new qlr_matrix{qlr::pipeline::builtin_matrix(name)};
        return QLR_OK;
    });
}

qlr_status qlr_matrix_dim(const qlr_matrix *m, size_t *out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = m->m.dim();
        return QLR_OK;
    });
}

qlr_status qlr_matrix_to_json(const qlr_matrix *m, char **out) {
    clear(out);
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = copy_string(qlr::matrix_to_json(m->m).dump());
        return QLR_OK;
    });
}

void qlr_matrix_free(qlr_matrix *m) {
    delete m;
}

qlr_status qlr_trace_fidelity(const qlr_matrix *approx, const qlr_matrix *target, double *out) {
    return guarded([&] {
        require(approx, "approx");
        require(target, "target");
        require(out, "out");
        *out = qlr::gloa::trace_fidelity(approx->m, target->m);
        return QLR_OK;
    });
}

qlr_status qlr_hs_distance(const qlr_matrix *a, const qlr_matrix *b, double *out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = qlr::hilbert_schmidt_distance(a->m, b->m);
        return QLR_OK;
    });
}

qlr_status qlr_gene_string_parse(const char *text, qlr_gene_string **out) {
    clear(out);
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new qlr_gene_string{qlr::gloa::parse_gene_string(text)};
        return QLR_OK;
    });
}

qlr_status qlr_gene_string_load(const char *path, qlr_gene_string **out) {
    clear(out);
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new qlr_gene_string{qlr::gloa::load_gene_string(path)};
        return QLR_OK;
    });
}

qlr_status qlr_gene_string_save(const qlr_gene_string *gs, const char *path) {
    return guarded([&] {
        require(gs, "gene string");
        require(path, "path");
        qlr::gloa::save_gene_string(gs->gs, path);
        return QLR_OK;
    });
}

qlr_status qlr_gene_string_to_text(const qlr_gene_string *gs, char **out) {
    clear(out);
    return guarded([&] {
        require(gs, "gene string");
        require(out, "out");
        *out = copy_string(qlr::gloa::to_text(gs->gs));
        return QLR_OK;
    });
}

qlr_status qlr_gene_string_unitary(const qlr_gene_string *gs, qlr_matrix **out) {
    clear(out);
    return guarded([&] {
        require(gs, "gene string");
        require(out, "out");
        *out = new qlr_matrix{qlr::gloa::string_to_unitary(gs->gs)};
        return QLR_OK;
    });
}

void qlr_gene_string_free(qlr_gene_string *gs) {
    delete gs;
}

qlr_status qlr_approximate(const qlr_matrix *target, const char *params_json, int refine, qlr_gene_string **out,
                           char **summary_json) {
    clear(out);
    clear(summary_json);
    return guarded([&] {
        require(target, "target");
        require(out, "out");
        qlr::gloa::GloaParams base;
        std::size_t dim = target->m.dim();
        base.num_qubits = 0;
        while ((std::size_t{1} << base.num_qubits) < dim) {
            ++base.num_qubits;
        }
        if ((std::size_t{1} << base.num_qubits) != dim) {
            throw qlr::Error(qlr::ErrorCode::kDimension, "target dimension is not a power of two");
        }
        if (base.num_qubits == 1) {
            base.gate_set = qlr::gloa::GateSet::single_qubit_default();
        }
        auto params = qlr::pipeline::gloa_params_from_json(parse_optional(params_json), base);
        auto result = qlr::pipeline::approximate(target->m, params, refine != 0);
        if (summary_json != nullptr) {
            nlohmann::json s{
                {"fidelity", result.fidelity},
                {"fidelity_before_refine", result.fidelity_before_refine},
                {"iterations", result.iterations},
                {"seed", result.seed},
                {"params", qlr::pipeline::gloa_params_to_json(params)},
            };
            *summary_json = copy_string(s.dump());
        }
        *out = new qlr_gene_string{std::move(result.best)};
        return QLR_OK;
    });
}

qlr_status qlr_refine(qlr_gene_string *gs, const qlr_matrix *target) {
    return guarded([&] {
        require(gs, "gene string");
        require(target, "target");
        gs->gs = qlr::gloa::refine_angles(gs->gs, target->m);
        return QLR_OK;
    });
}

qlr_status qlr_pauli_gene_string(const qlr_matrix *a, double theta, qlr_gene_string **out, double *global_phase) {
    clear(out);
    return guarded([&] {
        require(a, "matrix");
        require(out, "out");
        auto p = qlr::gloa::pauli_exponential_gene_string(a->m, theta);
        if (global_phase != nullptr) {
            *global_phase = p.global_phase;
        }
        *out = new qlr_gene_string{std::move(p.genes)};
        return QLR_OK;
    });
}

qlr_status qlr_solve(const char *input_path, const char *config_json, const char *overrides_json,
                     char **report_json) {
    clear(report_json);
    return guarded([&] {
        require(input_path, "input path");
        require(report_json, "report");
        auto options = qlr::pipeline::solve_options_from_json(parse_optional(config_json));
        options = qlr::pipeline::solve_options_from_json(parse_optional(overrides_json), options);
        auto report = qlr::pipeline::solve_file(input_path, options);
        *report_json = copy_string(qlr::pipeline::report_to_json(report).dump(2));
        if (!report.hhl.success) {
            return fail(
                QLR_ERR_POSTSELECTION,
                "postselection failed (probability " + std::to_string(report.hhl.postselect_probability) + ")");
        }
        return QLR_OK;
    });
}

qlr_status qlr_verify_qpe(const qlr_matrix *a, size_t j, const char *config_json, char **out) {
    clear(out);
    return guarded([&] {
        require(a, "matrix");
        require(out, "out");
        auto config = qlr::hhl::config_from_json(parse_optional(config_json));
        auto probs = qlr::hhl::verify_qpe(a->m, j, config);
        auto eig = qlr::eigh(a->m);
        std::size_t peak = 0;
        nlohmann::json dist = nlohmann::json::object();
        for (std::size_t k = 0; k < probs.size(); ++k) {
            if (probs[k] > probs[peak]) {
                peak = k;
            }
            dist[qlr::qsim::bitstring(k, config.clock_qubits)] = probs[k];
        }
        nlohmann::json report{
            {"eigenvector", j},
            {"eigenvalue", eig.eigenvalues[j]},
            {"most_likely", qlr::qsim::bitstring(peak, config.clock_qubits)},
            {"probability", probs[peak]},
            {"distribution", dist},
        };
        *out = copy_string(report.dump(2));
        return QLR_OK;
    });
}

qlr_status qlr_emit_plot(const char *report_json, char **csv) {
    clear(csv);
    return guarded([&] {
        require(report_json, "report");
        require(csv, "csv");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(report_json);
        } catch (const nlohmann::json::exception &e) {
            throw qlr::Error(qlr::ErrorCode::kParse, std::string("report: ") + e.what());
        }
        auto report = qlr::pipeline::report_from_json(j);
        *csv = copy_string(qlr::pipeline::emit_plot_csv(report));
        return QLR_OK;
    });
}

}  // extern "C"
