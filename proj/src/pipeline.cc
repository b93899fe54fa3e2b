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

#include "qlr/pipeline.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qlr/error.h"

namespace qlr::pipeline {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_like_json(std::string_view s) {
    auto pos = s.find_first_not_of(" \t\r\n");
    return pos != std::string_view::npos && (s[pos] == '{' || s[pos] == '[');
}

template <typename T>
void read_key(const nlohmann::json &j, const char *key, T &out) {
    if (j.contains(key)) {
        out = j[key].get<T>();
    }
}

nlohmann::json solution_to_json(const regression::ClassicalSolution &s) {
    return {{"beta_hat", s.beta_hat}, {"residual_norm", s.residual_norm}};
}

}  // namespace

DenseMatrix builtin_matrix(std::string_view name) {
    static const double kPaperA[16] = {15, 9, 5, -3, 9, 15, 3, -5, 5, 3, 15, -9, -3, -5, -9, 15};
    std::vector<Complex> entries;
    for (double v : kPaperA) {
        entries.emplace_back(v / 4.0, 0.0);
    }
    DenseMatrix a(4, std::move(entries));
    if (name == "paperA") {
        return a;
    }
    if (name == "expA16") {
        return matrix_exp_i(a, 2.0 * std::numbers::pi / 16.0);
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown builtin matrix '" + std::string(name) + "'");
}

std::string fingerprint(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

nlohmann::json solve_options_to_json(const SolveOptions &o) {
    auto j = hhl::config_to_json(o.hhl);
    j["intercept"] = o.intercept;
    j["kappa_bound"] = o.kappa_bound;
    j["gene_string_path"] = o.gene_string_path;
    return j;
}

SolveOptions solve_options_from_json(const nlohmann::json &j, SolveOptions base) {
    if (!j.is_object()) {
        throw Error(ErrorCode::kParse, "solve options must be a JSON object");
    }
    base.hhl = hhl::config_from_json(j, base.hhl);
    try {
        read_key(j, "intercept", base.intercept);
        read_key(j, "kappa_bound", base.kappa_bound);
        read_key(j, "gene_string_path", base.gene_string_path);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::kParse, std::string("solve options: ") + e.what());
    }
    return base;
}

nlohmann::json report_to_json(const RunReport &r) {
    nlohmann::json j;
    j["input"] = {{"path", r.input_path}, {"fingerprint", r.input_fingerprint}, {"kind", r.input_kind}};
    j["config"] = solve_options_to_json(r.options);
    j["seed"] = r.options.hhl.seed;
    j["normal_equations"] = regression::normal_equations_to_json(r.problem);
    j["conditioning"] = {{"kappa", r.conditioning.kappa}, {"well_conditioned", r.conditioning.well_conditioned}};
    j["classical"] = solution_to_json(r.classical);
    j["hhl"] = hhl::result_to_json(r.hhl);
    auto timings = nlohmann::json::array();
    for (const auto &[stage, ms] : r.timings_ms) {
        timings.push_back({{"stage", stage}, {"ms", ms}});
    }
    j["timings_ms"] = timings;
    return j;
}

RunReport report_from_json(const nlohmann::json &j) {
    RunReport r;
    try {
        const auto &input = j.at("input");
        r.input_path = input.at("path").get<std::string>();
        r.input_fingerprint = input.at("fingerprint").get<std::string>();
        r.input_kind = input.at("kind").get<std::string>();
        r.options = solve_options_from_json(j.at("config"));
        r.problem = regression::normal_equations_from_json(j.at("normal_equations"));
        r.conditioning.kappa = j.at("conditioning").at("kappa").get<double>();
        r.conditioning.well_conditioned = j.at("conditioning").at("well_conditioned").get<bool>();
        r.classical.beta_hat = j.at("classical").at("beta_hat").get<std::vector<double>>();
        r.classical.residual_norm = j.at("classical").at("residual_norm").get<double>();
        r.hhl = hhl::result_from_json(j.at("hhl"));
        for (const auto &t : j.at("timings_ms")) {
            r.timings_ms.emplace_back(t.at("stage").get<std::string>(), t.at("ms").get<double>());
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::kParse, std::string("run report: ") + e.what());
    }
    return r;
}

RunReport solve_text(std::string_view contents, const std::string &label, SolveOptions options) {
    RunReport report;
    report.input_path = label;
    report.input_fingerprint = fingerprint(contents);

    auto start = Clock::now();
    if (looks_like_json(contents)) {
        report.input_kind = "matrix";
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(contents);
        } catch (const nlohmann::json::exception &e) {
            throw Error(ErrorCode::kParse, std::string("input JSON: ") + e.what());
        }
        report.problem = regression::normal_equations_from_json(j);
        report.timings_ms.emplace_back("load", ms_since(start));
    } else {
        report.input_kind = "dataset";
        std::istringstream in{std::string(contents)};
        auto dataset = regression::load_dataset(in);
        if (options.intercept) {
            dataset = regression::with_intercept(dataset);
        }
        report.timings_ms.emplace_back("load", ms_since(start));
        start = Clock::now();
        report.problem = regression::build_normal_equations(dataset);
        report.timings_ms.emplace_back("normal_equations", ms_since(start));
    }

    start = Clock::now();
    report.conditioning = regression::validate_conditioning(report.problem, options.kappa_bound);
    if (!report.conditioning.well_conditioned) {
        throw Error(
            ErrorCode::kConditioning, "condition number " + std::to_string(report.conditioning.kappa) +
                                          " exceeds the bound " + std::to_string(options.kappa_bound));
    }
    report.classical = regression::solve_least_squares_classical(report.problem);
    report.timings_ms.emplace_back("classical", ms_since(start));

    if (!options.gene_string_path.empty()) {
        options.hhl.gene_string = gloa::load_gene_string(options.gene_string_path);
    }
    report.options = options;
    start = Clock::now();
    report.hhl = hhl::run_hhl(report.problem, options.hhl);
    report.timings_ms.emplace_back("hhl", ms_since(start));
    return report;
}

RunReport solve_file(const std::string &path, SolveOptions options) {
    return solve_text(read_file(path), path, std::move(options));
}

std::string emit_plot_csv(const RunReport &r) {
    const auto &h = r.hhl;
    if (!h.success || h.rescaled_solution.empty() || h.rescaled_solution.size() != h.classical_reference.size()) {
        throw Error(ErrorCode::kInvalidArgument, "report holds no solution to plot");
    }
    int width = 0;
    while ((std::size_t{1} << width) < h.rescaled_solution.size()) {
        ++width;
    }
    std::ostringstream out;
    out << "basis_state,predicted_amplitude,simulated_amplitude\n";
    char buf[64];
    for (std::size_t i = 0; i < h.rescaled_solution.size(); ++i) {
        // Values within rounding of zero print without a sign.
        double predicted = h.classical_reference[i] + 0.0;
        double simulated = std::abs(h.rescaled_solution[i]) < 5e-5 ? 0.0 : h.rescaled_solution[i];
        std::snprintf(buf, sizeof buf, ",%.4f,%.4f\n", predicted, simulated);
        out << qsim::bitstring(i, width) << buf;
    }
    return out.str();
}

gloa::GloaParams gloa_params_from_json(const nlohmann::json &j, gloa::GloaParams base) {
    if (!j.is_object()) {
        throw Error(ErrorCode::kParse, "GLOA parameters must be a JSON object");
    }
    try {
        read_key(j, "groups", base.groups);
        read_key(j, "members", base.members);
        read_key(j, "max_gates", base.max_gates);
        read_key(j, "num_qubits", base.num_qubits);
        if (j.contains("gate_set")) {
            base.gate_set = gloa::GateSet::parse(j["gate_set"].get<std::string>());
        }
        read_key(j, "r1", base.r1);
        read_key(j, "r2", base.r2);
        read_key(j, "r3", base.r3);
        read_key(j, "fidelity_threshold", base.fidelity_threshold);
        read_key(j, "max_iterations", base.max_iterations);
        read_key(j, "seed", base.seed);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::kParse, std::string("GLOA parameters: ") + e.what());
    }
    return base;
}

nlohmann::json gloa_params_to_json(const gloa::GloaParams &p) {
    return {
        {"groups", p.groups},
        {"members", p.members},
        {"max_gates", p.max_gates},
        {"num_qubits", p.num_qubits},
        {"gate_set", p.gate_set.to_string()},
        {"r1", p.r1},
        {"r2", p.r2},
        {"r3", p.r3},
        {"fidelity_threshold", p.fidelity_threshold},
        {"max_iterations", p.max_iterations},
        {"seed", p.seed},
    };
}

Approximation approximate(const DenseMatrix &target, const gloa::GloaParams &params, bool refine) {
    auto evolved = gloa::evolve(target, params);
    Approximation out{evolved.best, evolved.fidelity, evolved.fidelity, evolved.iterations, params.seed};
    if (refine) {
        out.best = gloa::refine_angles(out.best, target);
        out.fidelity = gloa::trace_fidelity(gloa::string_to_unitary(out.best), target);
    }
    return out;
}

}  // namespace qlr::pipeline
