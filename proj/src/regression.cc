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

#include "qlr/regression.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qlr/error.h"

namespace qlr::regression {

namespace {

std::string trim(std::string_view s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return {};
    }
    auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_cells(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) {
        cells.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

[[noreturn]] void parse_error(std::size_t line, const std::string &what) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

double parse_number(const std::string &cell, std::size_t line) {
    double value = 0.0;
    const char *first = cell.data();
    const char *last = cell.data() + cell.size();
    if (!cell.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (cell.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
        parse_error(line, "non-numeric cell '" + cell + "'");
    }
    return value;
}

}  // namespace

Dataset load_dataset(std::istream &in) {
    Dataset d;
    std::string line;
    std::size_t line_number = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (trim(line).empty()) {
            continue;
        }
        auto cells = split_cells(line);
        if (!have_header) {
            if (cells.size() < 2) {
                parse_error(line_number, "header needs a response column and at least one feature");
            }
            if (cells[0] != "y" && cells[0] != "Y") {
                parse_error(line_number, "first header column must be 'y', got '" + cells[0] + "'");
            }
            for (std::size_t k = 1; k < cells.size(); ++k) {
                if (cells[k].empty()) {
                    parse_error(line_number, "empty feature name");
                }
                d.feature_names.push_back(cells[k]);
            }
            have_header = true;
            continue;
        }
        if (cells.size() != d.feature_count() + 1) {
            parse_error(
                line_number,
                "expected " + std::to_string(d.feature_count() + 1) + " cells, got " + std::to_string(cells.size()));
        }
        d.responses.push_back(parse_number(cells[0], line_number));
        std::vector<double> row;
        row.reserve(d.feature_count());
        for (std::size_t k = 1; k < cells.size(); ++k) {
            row.push_back(parse_number(cells[k], line_number));
        }
        d.features.push_back(std::move(row));
    }
    if (!have_header) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) + ": empty dataset");
    }
    if (d.responses.empty()) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) + ": dataset has no data rows");
    }
    return d;
}

Dataset load_dataset_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::kIo, "cannot open dataset '" + path + "'");
    }
    return load_dataset(in);
}

Dataset with_intercept(const Dataset &d) {
    Dataset out = d;
    out.feature_names.insert(out.feature_names.begin(), "intercept");
    for (auto &row : out.features) {
        row.insert(row.begin(), 1.0);
    }
    return out;
}

NormalEquations build_normal_equations(const Dataset &d) {
    const std::size_t p = d.feature_count();
    if (p == 0 || d.row_count() == 0) {
        throw Error(ErrorCode::kInvalidArgument, "dataset needs at least one row and one feature");
    }
    NormalEquations ne{DenseMatrix(p), std::vector<double>(p, 0.0), d.feature_names};
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = r; c < p; ++c) {
            double total = 0.0;
            for (const auto &row : d.features) {
                total += row[r] * row[c];
            }
            ne.a(r, c) = total;
            ne.a(c, r) = total;
        }
        double total = 0.0;
        for (std::size_t i = 0; i < d.row_count(); ++i) {
            total += d.features[i][r] * d.responses[i];
        }
        ne.b[r] = total;
    }
    return ne;
}

ClassicalSolution solve_least_squares_classical(const NormalEquations &ne) {
    const std::size_t n = ne.a.dim();
    if (ne.b.size() != n) {
        throw Error(ErrorCode::kDimension, "normal equations: b length does not match A");
    }
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
    double max_entry = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m[r][c] = ne.a(r, c).real();
            max_entry = std::max(max_entry, std::abs(m[r][c]));
        }
        m[r][n] = ne.b[r];
    }
    const double pivot_floor = 1e-12 * max_entry;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[best][col])) {
                best = r;
            }
        }
        if (max_entry == 0.0 || std::abs(m[best][col]) < pivot_floor) {
            throw Error(ErrorCode::kConditioning, "rank-deficient normal equations: XᵀX is singular");
        }
        std::swap(m[col], m[best]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c <= n; ++c) {
                m[r][c] -= factor * m[col][c];
            }
        }
    }
    ClassicalSolution out{std::vector<double>(n), 0.0};
    for (std::size_t r = n; r-- > 0;) {
        double acc = m[r][n];
        for (std::size_t c = r + 1; c < n; ++c) {
            acc -= m[r][c] * out.beta_hat[c];
        }
        out.beta_hat[r] = acc / m[r][r];
    }
    std::vector<double> residual(n);
    for (std::size_t r = 0; r < n; ++r) {
        double acc = -ne.b[r];
        for (std::size_t c = 0; c < n; ++c) {
            acc += ne.a(r, c).real() * out.beta_hat[c];
        }
        residual[r] = acc;
    }
    out.residual_norm = vector_norm(std::span<const double>(residual));
    return out;
}

ConditioningReport validate_conditioning(const NormalEquations &ne, double kappa_bound) {
    ConditioningReport report;
    report.kappa = condition_number(ne.a);
    report.well_conditioned = report.kappa <= kappa_bound;
    return report;
}

nlohmann::json normal_equations_to_json(const NormalEquations &ne) {
    return {{"A", matrix_to_json(ne.a)}, {"b", ne.b}, {"column_order", ne.column_order}};
}

NormalEquations normal_equations_from_json(const nlohmann::json &j) {
    if (j.is_object() && j.contains("A")) {
        NormalEquations ne{matrix_from_json(j["A"]), {}, {}};
        if (!j.contains("b") || !j["b"].is_array()) {
            throw Error(ErrorCode::kParse, "normal equations JSON needs a \"b\" array");
        }
        for (const auto &v : j["b"]) {
            if (!v.is_number()) {
                throw Error(ErrorCode::kParse, "normal equations \"b\" must be numeric");
            }
            ne.b.push_back(v.get<double>());
        }
        if (ne.b.size() != ne.a.dim()) {
            throw Error(ErrorCode::kDimension, "normal equations: b length does not match A");
        }
        if (j.contains("column_order")) {
            ne.column_order = j["column_order"].get<std::vector<std::string>>();
        }
        if (ne.column_order.empty()) {
            for (std::size_t k = 0; k < ne.a.dim(); ++k) {
                ne.column_order.push_back("x" + std::to_string(k + 1));
            }
        }
        return ne;
    }
    NormalEquations ne{matrix_from_json(j), {}, {}};
    const std::size_t n = ne.a.dim();
    ne.b.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (std::size_t k = 0; k < n; ++k) {
        ne.column_order.push_back("x" + std::to_string(k + 1));
    }
    return ne;
}

}  // namespace qlr::regression
