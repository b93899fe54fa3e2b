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

#ifndef QLR_REGRESSION_H_
#define QLR_REGRESSION_H_

#include <istream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qlr/numerics.h"

namespace qlr::regression {

/// Rows of {y, x_1..x_p}. No intercept column is implied.
struct Dataset {
    std::vector<std::string> feature_names;
    std::vector<double> responses;
    std::vector<std::vector<double>> features;

    std::size_t row_count() const {
        return responses.size();
    }
    std::size_t feature_count() const {
        return feature_names.size();
    }
};

/// Parses CSV with a header `y,<name1>,...,<namep>` and a numeric body.
/// Blank lines are skipped. Errors carry the 1-based line number.
Dataset load_dataset(std::istream &in);
Dataset load_dataset_file(const std::string &path);

/// Prepends an all-ones "intercept" feature.
Dataset with_intercept(const Dataset &d);

/// XᵀX β = Xᵀy.
struct NormalEquations {
    DenseMatrix a;
    std::vector<double> b;
    std::vector<std::string> column_order;

    bool operator==(const NormalEquations &other) const = default;
};

NormalEquations build_normal_equations(const Dataset &d);

struct ClassicalSolution {
    std::vector<double> beta_hat;
    double residual_norm = 0.0;

    bool operator==(const ClassicalSolution &other) const = default;
};

/// Gaussian elimination with partial pivoting. Throws kConditioning
/// ("rank-deficient normal equations") when a pivot falls below
/// 1e-12 * max|A|.
ClassicalSolution solve_least_squares_classical(const NormalEquations &ne);

struct ConditioningReport {
    double kappa = 0.0;
    bool well_conditioned = false;

    bool operator==(const ConditioningReport &other) const = default;
};

inline constexpr double kDefaultKappaBound = 16.0;

ConditioningReport validate_conditioning(const NormalEquations &ne, double kappa_bound = kDefaultKappaBound);

/// {"A": <matrix JSON>, "b": [...], "column_order": [...]}.
nlohmann::json normal_equations_to_json(const NormalEquations &ne);
/// Accepts the object above, or a bare matrix JSON (b defaults to the
/// uniform vector of norm one).
NormalEquations normal_equations_from_json(const nlohmann::json &j);

}  // namespace qlr::regression

#endif  // QLR_REGRESSION_H_
