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

#ifndef QLR_PIPELINE_H_
#define QLR_PIPELINE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qlr/gloa.h"
#include "qlr/hhl.h"
#include "qlr/numerics.h"
#include "qlr/regression.h"

namespace qlr::pipeline {

/// "paperA" (the 4x4 regression fixture matrix) or "expA16"
/// (exp(i·paperA·2π/16)).
DenseMatrix builtin_matrix(std::string_view name);

/// "fnv1a64:" followed by 16 hex digits.
std::string fingerprint(std::string_view bytes);

struct SolveOptions {
    hhl::HhlConfig hhl;
    bool intercept = false;
    double kappa_bound = regression::kDefaultKappaBound;
    /// Read into hhl.gene_string before solving.
    std::string gene_string_path;

    bool operator==(const SolveOptions &other) const = default;
};

nlohmann::json solve_options_to_json(const SolveOptions &o);
/// Keys missing from `j` keep the value in `base`.
SolveOptions solve_options_from_json(const nlohmann::json &j, SolveOptions base = {});

struct RunReport {
    std::string input_path;
    std::string input_fingerprint;
    /// "dataset" or "matrix".
    std::string input_kind;
    SolveOptions options;
    regression::NormalEquations problem;
    regression::ConditioningReport conditioning;
    regression::ClassicalSolution classical;
    hhl::HhlResult hhl;
    std::vector<std::pair<std::string, double>> timings_ms;

    bool operator==(const RunReport &other) const = default;
};

nlohmann::json report_to_json(const RunReport &r);
RunReport report_from_json(const nlohmann::json &j);

/// CSV dataset, or JSON normal equations / bare matrix when the file starts
/// with '{'. Throws kConditioning when κ exceeds the bound.
RunReport solve_file(const std::string &path, SolveOptions options);
RunReport solve_text(std::string_view contents, const std::string &label, SolveOptions options);

/// basis_state,predicted_amplitude,simulated_amplitude with four decimals.
std::string emit_plot_csv(const RunReport &r);

/// Keys as in GloaParams; gate_set is a comma-separated list.
gloa::GloaParams gloa_params_from_json(const nlohmann::json &j, gloa::GloaParams base = {});
nlohmann::json gloa_params_to_json(const gloa::GloaParams &p);

struct Approximation {
    gloa::GeneString best;
    double fidelity = 0.0;
    double fidelity_before_refine = 0.0;
    int iterations = 0;
    std::uint64_t seed = 0;
};

/// evolve, then refine_angles when `refine` is set.
Approximation approximate(const DenseMatrix &target, const gloa::GloaParams &params, bool refine);

}  // namespace qlr::pipeline

#endif  // QLR_PIPELINE_H_
