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

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlr/qlr.h"

namespace {

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level() {
    static const LogLevel level = [] {
        const char *env = std::getenv("QLR_LOG");
        std::string v = env ? env : "error";
        if (v == "debug") {
            return LogLevel::kDebug;
        }
        if (v == "info") {
            return LogLevel::kInfo;
        }
        return LogLevel::kError;
    }();
    return level;
}

void log(LogLevel level, const std::string &message) {
    static const char *names[] = {"error", "info", "debug"};
    if (level <= log_level()) {
        std::cerr << "qlr[" << names[static_cast<int>(level)] << "] " << message << "\n";
    }
}

/// Thrown to unwind with a library status; main turns it into the exit code.
struct Failure {
    qlr_status status;
};

void check(qlr_status status) {
    if (status != QLR_OK) {
        log(LogLevel::kError, std::string(qlr_status_name(status)) + ": " + qlr_last_error_message());
        throw Failure{status};
    }
}

void usage_error(const std::string &message) {
    log(LogLevel::kError, message);
    throw Failure{QLR_ERR_INVALID_ARGUMENT};
}

struct MatrixDeleter {
    void operator()(qlr_matrix *m) const {
        qlr_matrix_free(m);
    }
};
struct GeneStringDeleter {
    void operator()(qlr_gene_string *g) const {
        qlr_gene_string_free(g);
    }
};
struct StringDeleter {
    void operator()(char *s) const {
        qlr_string_free(s);
    }
};
using MatrixPtr = std::unique_ptr<qlr_matrix, MatrixDeleter>;
using GeneStringPtr = std::unique_ptr<qlr_gene_string, GeneStringDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string read_text(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        log(LogLevel::kError, "cannot open '" + path + "'");
        throw Failure{QLR_ERR_IO};
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

nlohmann::json read_json(const std::string &path) {
    try {
        return nlohmann::json::parse(read_text(path));
    } catch (const nlohmann::json::exception &e) {
        log(LogLevel::kError, path + ": " + e.what());
        throw Failure{QLR_ERR_PARSE};
    }
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << "\n";
        }
        return;
    }
    std::ofstream out(path);
    if (!out) {
        log(LogLevel::kError, "cannot write '" + path + "'");
        throw Failure{QLR_ERR_IO};
    }
    out << text;
    log(LogLevel::kInfo, "wrote " + path);
}

MatrixPtr load_matrix(const std::string &path, const std::string &builtin) {
    qlr_matrix *m = nullptr;
    if (!builtin.empty()) {
        check(qlr_matrix_builtin(builtin.c_str(), &m));
    } else if (!path.empty()) {
        check(qlr_matrix_load(path.c_str(), &m));
    } else {
        usage_error("a matrix file or --builtin is required");
    }
    return MatrixPtr(m);
}

GeneStringPtr load_gene_string(const std::string &path) {
    qlr_gene_string *g = nullptr;
    check(qlr_gene_string_load(path.c_str(), &g));
    return GeneStringPtr(g);
}

std::string gene_string_text(const qlr_gene_string *g) {
    char *text = nullptr;
    check(qlr_gene_string_to_text(g, &text));
    return StringPtr(text).get();
}

struct SolveArgs {
    std::string input;
    std::string mode;
    std::optional<std::uint64_t> shots;
    bool exact_statevector = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> r;
    std::optional<int> clock_qubits;
    std::string rotation;
    std::string string_path;
    std::string config_path;
    bool intercept = false;
    std::optional<double> kappa_bound;
    std::string out;
};

int run_solve(const SolveArgs &a) {
    nlohmann::json config = nlohmann::json::object();
    if (!a.config_path.empty()) {
        config = read_json(a.config_path);
        if (!config.is_object()) {
            log(LogLevel::kError, a.config_path + ": config must be a JSON object");
            throw Failure{QLR_ERR_PARSE};
        }
    }
    nlohmann::json over = nlohmann::json::object();
    if (!a.mode.empty()) {
        over["unitary_mode"] = a.mode;
    }
    if (a.shots && a.exact_statevector) {
        usage_error("--shots and --exact-statevector are mutually exclusive");
    }
    if (a.shots) {
        over["shots"] = *a.shots;
    }
    if (a.exact_statevector) {
        over["shots"] = nullptr;
    }
    if (a.seed) {
        over["seed"] = *a.seed;
    } else if (!config.contains("seed")) {
        over["seed"] = entropy_seed();
    }
    if (a.r) {
        over["rotation_resolution"] = *a.r;
    }
    if (a.clock_qubits) {
        over["clock_qubits"] = *a.clock_qubits;
    }
    if (!a.rotation.empty()) {
        over["rotation_mode"] = a.rotation;
    }
    if (!a.string_path.empty()) {
        over["gene_string_path"] = a.string_path;
    }
    if (a.intercept) {
        over["intercept"] = true;
    }
    if (a.kappa_bound) {
        over["kappa_bound"] = *a.kappa_bound;
    }
    log(LogLevel::kDebug, "solve overrides " + over.dump());

    char *report = nullptr;
    qlr_status status = qlr_solve(a.input.c_str(), config.dump().c_str(), over.dump().c_str(), &report);
    StringPtr owned(report);
    if (report != nullptr) {
        write_output(a.out, report);
    }
    check(status);
    auto parsed = nlohmann::json::parse(report);
    std::ostringstream summary;
    summary << "error_2norm=" << parsed["hhl"]["error_2norm"].get<double>()
            << " postselect_probability=" << parsed["hhl"]["postselect_probability"].get<double>()
            << " seed=" << parsed["seed"].get<std::uint64_t>();
    log(LogLevel::kInfo, summary.str());
    return 0;
}

struct ApproximateArgs {
    std::string target;
    std::string builtin;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> groups;
    std::optional<int> members;
    std::optional<int> max_gates;
    std::optional<int> max_iterations;
    std::optional<double> threshold;
    std::string gate_set;
    bool refine = false;
    std::string out;
};

int run_approximate(const ApproximateArgs &a) {
    auto target = load_matrix(a.target, a.builtin);
    nlohmann::json params = nlohmann::json::object();
    if (!a.config_path.empty()) {
        params = read_json(a.config_path);
    }
    if (a.seed) {
        params["seed"] = *a.seed;
    } else if (!params.contains("seed")) {
        params["seed"] = entropy_seed();
    }
    if (a.groups) {
        params["groups"] = *a.groups;
    }
    if (a.members) {
        params["members"] = *a.members;
    }
    if (a.max_gates) {
        params["max_gates"] = *a.max_gates;
    }
    if (a.max_iterations) {
        params["max_iterations"] = *a.max_iterations;
    }
    if (a.threshold) {
        params["fidelity_threshold"] = *a.threshold;
    }
    if (!a.gate_set.empty()) {
        params["gate_set"] = a.gate_set;
    }
    qlr_gene_string *g = nullptr;
    char *summary = nullptr;
    check(qlr_approximate(target.get(), params.dump().c_str(), a.refine ? 1 : 0, &g, &summary));
    GeneStringPtr best(g);
    StringPtr owned_summary(summary);
    if (a.out.empty()) {
        std::cout << gene_string_text(best.get());
    } else {
        check(qlr_gene_string_save(best.get(), a.out.c_str()));
        log(LogLevel::kInfo, "wrote " + a.out);
    }
    std::cerr << nlohmann::json::parse(summary).dump() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string string_path;
    std::string target;
    std::string builtin;
    double threshold = 0.999;
};

int run_verify(const VerifyArgs &a) {
    auto g = load_gene_string(a.string_path);
    auto target = load_matrix(a.target, a.builtin);
    qlr_matrix *u = nullptr;
    check(qlr_gene_string_unitary(g.get(), &u));
    MatrixPtr approx(u);
    double fidelity = 0.0;
    double distance = 0.0;
    check(qlr_trace_fidelity(approx.get(), target.get(), &fidelity));
    check(qlr_hs_distance(approx.get(), target.get(), &distance));
    nlohmann::json out{{"trace_fidelity", fidelity}, {"hs_distance", distance}, {"threshold", a.threshold}};
    std::cout << out.dump() << "\n";
    return fidelity >= a.threshold ? 0 : QLR_ERR_BELOW_THRESHOLD;
}

struct QpeArgs {
    std::string matrix;
    std::string builtin;
    std::size_t eigenvector = 0;
    std::optional<int> clock_qubits;
    std::optional<double> time;
    std::string out;
};

int run_qpe(const QpeArgs &a) {
    auto m = load_matrix(a.matrix, a.builtin);
    nlohmann::json config = nlohmann::json::object();
    if (a.clock_qubits) {
        config["clock_qubits"] = *a.clock_qubits;
    }
    if (a.time) {
        config["evolution_time"] = *a.time;
    }
    char *out = nullptr;
    check(qlr_verify_qpe(m.get(), a.eigenvector, config.dump().c_str(), &out));
    StringPtr owned(out);
    write_output(a.out, out);
    return 0;
}

int run_emit_plot(const std::string &report_path, const std::string &out_path) {
    std::string report = read_text(report_path);
    char *csv = nullptr;
    check(qlr_emit_plot(report.c_str(), &csv));
    StringPtr owned(csv);
    write_output(out_path, csv);
    return 0;
}

int run_pauli_circuit(const std::string &matrix, const std::string &builtin, double theta, const std::string &out) {
    auto m = load_matrix(matrix, builtin);
    qlr_gene_string *g = nullptr;
    double phase = 0.0;
    check(qlr_pauli_gene_string(m.get(), theta, &g, &phase));
    GeneStringPtr owned(g);
    if (out.empty()) {
        std::cout << gene_string_text(owned.get());
    } else {
        check(qlr_gene_string_save(owned.get(), out.c_str()));
    }
    std::cerr << nlohmann::json{{"global_phase", phase}, {"theta", theta}}.dump() << "\n";
    return 0;
}

int run_unitary(const std::string &string_path, const std::string &out) {
    auto g = load_gene_string(string_path);
    qlr_matrix *u = nullptr;
    check(qlr_gene_string_unitary(g.get(), &u));
    MatrixPtr owned(u);
    char *json = nullptr;
    check(qlr_matrix_to_json(owned.get(), &json));
    StringPtr text(json);
    write_output(out, text.get());
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Regression through simulated HHL circuits and GLOA gate synthesis."};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qlr_version()));

    SolveArgs solve;
    auto *cmd_solve = app.add_subcommand("solve", "Solve a dataset (CSV) or linear system (JSON) with HHL");
    cmd_solve->add_option("input", solve.input, "Dataset CSV or matrix/normal-equations JSON")->required();
    cmd_solve->add_option("--mode", solve.mode, "exact | gene-string | pauli-circuit");
    cmd_solve->add_option("--shots", solve.shots, "Sample this many shots instead of reading the statevector");
    cmd_solve->add_flag("--exact-statevector", solve.exact_statevector, "Read amplitudes from the statevector");
    cmd_solve->add_option("--seed", solve.seed, "Sampling seed (random when omitted)");
    cmd_solve->add_option("--r", solve.r, "Rotation resolution r, C = 8π/2^r");
    cmd_solve->add_option("--clock-qubits", solve.clock_qubits, "Clock register size");
    cmd_solve->add_option("--rotation", solve.rotation, "arcsin | paper");
    cmd_solve->add_option("--string", solve.string_path, "Gene string for --mode gene-string");
    cmd_solve->add_option("--config", solve.config_path, "JSON config; flags override it");
    cmd_solve->add_flag("--intercept", solve.intercept, "Prepend an all-ones feature");
    cmd_solve->add_option("--kappa-bound", solve.kappa_bound, "Largest accepted condition number");
    cmd_solve->add_option("--out", solve.out, "Report path (stdout when omitted)");

    ApproximateArgs approx;
    auto *cmd_approx = app.add_subcommand("approximate", "Approximate a unitary with GLOA");
    auto *approx_target = cmd_approx->add_option("--target", approx.target, "Target matrix JSON");
    cmd_approx->add_option("--builtin", approx.builtin, "paperA | expA16")->excludes(approx_target);
    cmd_approx->add_option("--config", approx.config_path, "JSON GLOA parameters; flags override it");
    cmd_approx->add_option("--seed", approx.seed, "Seed (random when omitted)");
    cmd_approx->add_option("--groups", approx.groups, "Number of groups");
    cmd_approx->add_option("--members", approx.members, "Members per group");
    cmd_approx->add_option("--max-gates", approx.max_gates, "Genes per string (at most 20)");
    cmd_approx->add_option("--max-iterations", approx.max_iterations, "Iteration cap");
    cmd_approx->add_option("--threshold", approx.threshold, "Stop at this trace fidelity");
    cmd_approx->add_option("--gate-set", approx.gate_set, "Comma-separated gate names");
    cmd_approx->add_flag("--refine", approx.refine, "Refine angles after the search");
    cmd_approx->add_option("--out", approx.out, "Gene string path (stdout when omitted)");

    VerifyArgs verify;
    auto *cmd_verify = app.add_subcommand("verify", "Compare a gene string with a target unitary");
    cmd_verify->add_option("--string", verify.string_path, "Gene string")->required();
    auto *verify_target = cmd_verify->add_option("--target", verify.target, "Target matrix JSON");
    cmd_verify->add_option("--builtin", verify.builtin, "paperA | expA16")->excludes(verify_target);
    cmd_verify->add_option("--threshold", verify.threshold, "Exit 10 below this fidelity");

    QpeArgs qpe;
    auto *cmd_qpe = app.add_subcommand("qpe", "Phase estimation on one eigenvector");
    auto *qpe_matrix = cmd_qpe->add_option("--matrix", qpe.matrix, "Hermitian matrix JSON");
    cmd_qpe->add_option("--builtin", qpe.builtin, "paperA")->excludes(qpe_matrix);
    cmd_qpe->add_option("--eigenvector", qpe.eigenvector, "Index into the ascending spectrum")->required();
    cmd_qpe->add_option("--clock-qubits", qpe.clock_qubits, "Clock register size");
    cmd_qpe->add_option("--time", qpe.time, "Evolution time t0");
    cmd_qpe->add_option("--out", qpe.out, "Output path (stdout when omitted)");

    std::string plot_report;
    std::string plot_out;
    auto *cmd_plot = app.add_subcommand("emit-plot", "CSV of predicted and simulated amplitudes");
    cmd_plot->add_option("report", plot_report, "Report JSON from solve")->required();
    cmd_plot->add_option("--out", plot_out, "CSV path (stdout when omitted)");

    std::string pauli_matrix;
    std::string pauli_builtin;
    double pauli_theta = 2.0 * 3.14159265358979323846 / 16.0;
    std::string pauli_out;
    auto *cmd_pauli = app.add_subcommand("pauli-circuit", "Exact gene string for exp(iAθ) of a 4x4 matrix");
    auto *pauli_m = cmd_pauli->add_option("--matrix", pauli_matrix, "Hermitian 4x4 matrix JSON");
    cmd_pauli->add_option("--builtin", pauli_builtin, "paperA")->excludes(pauli_m);
    cmd_pauli->add_option("--theta", pauli_theta, "Evolution angle (default 2π/16)");
    cmd_pauli->add_option("--out", pauli_out, "Gene string path (stdout when omitted)");

    std::string unitary_string;
    std::string unitary_out;
    auto *cmd_unitary = app.add_subcommand("unitary", "Dump the matrix of a gene string");
    cmd_unitary->add_option("--string", unitary_string, "Gene string")->required();
    cmd_unitary->add_option("--out", unitary_out, "Matrix JSON path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return QLR_ERR_INVALID_ARGUMENT;
    }

    try {
        if (*cmd_solve) {
            return run_solve(solve);
        }
        if (*cmd_approx) {
            return run_approximate(approx);
        }
        if (*cmd_verify) {
            return run_verify(verify);
        }
        if (*cmd_qpe) {
            return run_qpe(qpe);
        }
        if (*cmd_plot) {
            return run_emit_plot(plot_report, plot_out);
        }
        if (*cmd_pauli) {
            return run_pauli_circuit(pauli_matrix, pauli_builtin, pauli_theta, pauli_out);
        }
        if (*cmd_unitary) {
            return run_unitary(unitary_string, unitary_out);
        }
    } catch (const Failure &f) {
        return static_cast<int>(f.status);
    } catch (const std::exception &e) {
        log(LogLevel::kError, e.what());
        return QLR_ERR_INTERNAL;
    }
    return QLR_ERR_INVALID_ARGUMENT;
}
