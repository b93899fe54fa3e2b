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

#include "qlr/hhl.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qlr/error.h"
#include "qlr/pauli_exponential.h"

namespace qlr::hhl {

namespace {

using qsim::GateKind;
using qsim::GateOp;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPostselectFloor = 1e-9;

[[noreturn]] void invalid(const std::string &what) {
    throw Error(ErrorCode::kInvalidArgument, what);
}

int input_qubits_for(std::size_t dim) {
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    if ((std::size_t{1} << n) != dim || n < 1) {
        throw Error(ErrorCode::kDimension, "HHL needs a matrix whose dimension is a power of two, at least 2");
    }
    return n;
}

nlohmann::json complex_vector_to_json(std::span<const Complex> v) {
    auto out = nlohmann::json::array();
    for (auto z : v) {
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

std::vector<Complex> complex_vector_from_json(const nlohmann::json &j) {
    std::vector<Complex> out;
    for (const auto &z : j) {
        out.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    }
    return out;
}

/// Controlled U^power on the input register.
qsim::Circuit controlled_power(
    const DenseMatrix &a, const HhlConfig &config, const Layout &layout, int control, std::uint64_t power) {
    const double step = config.evolution_time / std::ldexp(1.0, config.clock_qubits);
    const double angle = step * static_cast<double>(power);
    const int controls[1] = {control};
    qsim::Circuit out(layout.num_qubits);
    switch (config.unitary_mode) {
        case UnitaryMode::kExactSpectral:
            out.append(GateOp::from_matrix(matrix_exp_i(a, angle), layout.input, {control}));
            break;
        case UnitaryMode::kExactPauliCircuit: {
            if (a.dim() != 4) {
                throw Error(ErrorCode::kDimension, "the Pauli-circuit mode needs a 4x4 matrix");
            }
            auto pc = gloa::build_pauli_exponential_circuit(a, angle);
            out.append(pc.circuit.embedded(layout.num_qubits, layout.input, controls));
            out.append(GateOp::make(GateKind::kPhase, {control}, {pc.global_phase}));
            break;
        }
        case UnitaryMode::kGeneString: {
            const auto &gs = *config.gene_string;
            if (gs.num_qubits != static_cast<int>(layout.input.size())) {
                throw Error(ErrorCode::kDimension, "gene string qubit count does not match the input register");
            }
            auto target = matrix_exp_i(a, step);
            double phase = gloa::global_phase_offset(gloa::string_to_unitary(gs), target);
            auto body = gloa::to_circuit(gs).embedded(layout.num_qubits, layout.input, controls);
            for (std::uint64_t k = 0; k < power; ++k) {
                out.append(body);
            }
            out.append(GateOp::make(GateKind::kPhase, {control}, {phase * static_cast<double>(power)}));
            break;
        }
    }
    return out;
}

/// Clock-0 slice of the ancilla-1 branch, in input-register order.
std::vector<Complex> solution_slice(const qsim::StateVector &state, const Layout &layout) {
    const int n_in = static_cast<int>(layout.input.size());
    const std::size_t dim = std::size_t{1} << n_in;
    const std::uint64_t ancilla_bit = std::uint64_t{1} << (layout.num_qubits - 1 - layout.ancilla);
    std::vector<Complex> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out[i] = state[ancilla_bit | i];
    }
    return out;
}

std::vector<double> reference_from(const std::vector<double> &beta, double &scale) {
    scale = 0.0;
    for (double v : beta) {
        double m = std::abs(v);
        if (m > 1e-12 && (scale == 0.0 || m < scale)) {
            scale = m;
        }
    }
    if (scale == 0.0) {
        throw Error(ErrorCode::kConditioning, "classical solution is zero");
    }
    std::vector<double> out;
    for (double v : beta) {
        out.push_back(v / scale);
    }
    return out;
}

}  // namespace

std::string_view unitary_mode_name(UnitaryMode mode) {
    switch (mode) {
        case UnitaryMode::kExactSpectral:
            return "exact-spectral";
        case UnitaryMode::kGeneString:
            return "gene-string";
        case UnitaryMode::kExactPauliCircuit:
            return "exact-pauli-circuit";
    }
    return "?";
}

UnitaryMode unitary_mode_from_name(std::string_view name) {
    if (name == "exact-spectral" || name == "exact") {
        return UnitaryMode::kExactSpectral;
    }
    if (name == "gene-string") {
        return UnitaryMode::kGeneString;
    }
    if (name == "exact-pauli-circuit" || name == "pauli-circuit") {
        return UnitaryMode::kExactPauliCircuit;
    }
    invalid("unknown unitary mode '" + std::string(name) + "'");
}

std::string_view rotation_mode_name(RotationMode mode) {
    return mode == RotationMode::kExactArcsin ? "exact-arcsin" : "paper-small-angle";
}

RotationMode rotation_mode_from_name(std::string_view name) {
    if (name == "exact-arcsin" || name == "arcsin") {
        return RotationMode::kExactArcsin;
    }
    if (name == "paper-small-angle" || name == "paper") {
        return RotationMode::kPaperSmallAngle;
    }
    invalid("unknown rotation mode '" + std::string(name) + "'");
}

double HhlConfig::rotation_constant_value() const {
    if (rotation_constant) {
        return *rotation_constant;
    }
    return 8.0 * std::numbers::pi / std::ldexp(1.0, rotation_resolution);
}

void HhlConfig::validate() const {
    if (clock_qubits < 1) {
        invalid("clock register needs at least one qubit");
    }
    if (rotation_resolution < 1 || rotation_resolution > 60) {
        invalid("rotation resolution must be in [1, 60]");
    }
    if (!(std::isfinite(evolution_time) && evolution_time > 0)) {
        invalid("evolution time must be positive");
    }
    double c = rotation_constant_value();
    if (!(std::isfinite(c) && c > 0)) {
        invalid("rotation constant must be positive");
    }
    if (shots && *shots == 0) {
        invalid("shots must be at least 1");
    }
    if (unitary_mode == UnitaryMode::kGeneString) {
        if (!gene_string) {
            invalid("gene-string mode needs a gene string");
        }
        gene_string->validate();
    }
}

nlohmann::json config_to_json(const HhlConfig &config) {
    nlohmann::json j;
    j["clock_qubits"] = config.clock_qubits;
    j["evolution_time"] = config.evolution_time;
    j["rotation_resolution"] = config.rotation_resolution;
    j["rotation_constant"] = config.rotation_constant ? nlohmann::json(*config.rotation_constant) : nlohmann::json();
    j["unitary_mode"] = unitary_mode_name(config.unitary_mode);
    j["rotation_mode"] = rotation_mode_name(config.rotation_mode);
    j["shots"] = config.shots ? nlohmann::json(*config.shots) : nlohmann::json();
    j["seed"] = config.seed;
    j["gene_string"] = config.gene_string ? nlohmann::json(gloa::to_text(*config.gene_string)) : nlohmann::json();
    return j;
}

HhlConfig config_from_json(const nlohmann::json &j, HhlConfig base) {
    if (!j.is_object()) {
        throw Error(ErrorCode::kParse, "HHL config must be a JSON object");
    }
    try {
        if (j.contains("clock_qubits")) {
            base.clock_qubits = j["clock_qubits"].get<int>();
        }
        if (j.contains("evolution_time")) {
            base.evolution_time = j["evolution_time"].get<double>();
        }
        if (j.contains("rotation_resolution")) {
            base.rotation_resolution = j["rotation_resolution"].get<int>();
        }
        if (j.contains("rotation_constant")) {
            base.rotation_constant = j["rotation_constant"].is_null()
                                         ? std::nullopt
                                         : std::optional<double>(j["rotation_constant"].get<double>());
        }
        if (j.contains("unitary_mode")) {
            base.unitary_mode = unitary_mode_from_name(j["unitary_mode"].get<std::string>());
        }
        if (j.contains("rotation_mode")) {
            base.rotation_mode = rotation_mode_from_name(j["rotation_mode"].get<std::string>());
        }
        if (j.contains("shots")) {
            base.shots = j["shots"].is_null() ? std::nullopt
                                              : std::optional<std::uint64_t>(j["shots"].get<std::uint64_t>());
        }
        if (j.contains("seed")) {
            base.seed = j["seed"].get<std::uint64_t>();
        }
        if (j.contains("gene_string")) {
            base.gene_string = j["gene_string"].is_null()
                                   ? std::nullopt
                                   : std::optional<gloa::GeneString>(
                                         gloa::parse_gene_string(j["gene_string"].get<std::string>()));
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::kParse, std::string("HHL config: ") + e.what());
    } catch (const Error &e) {
        throw Error(ErrorCode::kParse, std::string("HHL config: ") + e.what());
    }
    return base;
}

Layout Layout::make(int clock_qubits, int input_qubits) {
    Layout out;
    out.num_qubits = 1 + clock_qubits + input_qubits;
    if (out.num_qubits > qsim::kMaxQubits) {
        throw Error(ErrorCode::kDimension, "HHL register exceeds " + std::to_string(qsim::kMaxQubits) + " qubits");
    }
    out.ancilla = 0;
    for (int q = 0; q < clock_qubits; ++q) {
        out.clock.push_back(1 + q);
    }
    for (int q = 0; q < input_qubits; ++q) {
        out.input.push_back(1 + clock_qubits + q);
    }
    return out;
}

qsim::Circuit state_preparation(std::span<const double> b, const Layout &layout) {
    const std::size_t dim = std::size_t{1} << layout.input.size();
    if (b.size() != dim) {
        throw Error(ErrorCode::kDimension, "right-hand side length does not match the input register");
    }
    qsim::Circuit out(layout.num_qubits);
    double first = b[0];
    if (first != 0.0 && std::all_of(b.begin(), b.end(), [&](double v) { return std::abs(v - first) <= 1e-12 * std::abs(first); })) {
        for (int q : layout.input) {
            out.append(GateOp::make(GateKind::kH, {q}));
        }
        return out;
    }
    std::size_t nonzero = 0;
    std::size_t index = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (b[i] != 0.0) {
            ++nonzero;
            index = i;
        }
    }
    if (nonzero != 1) {
        invalid("state preparation supports only uniform or basis-vector right-hand sides");
    }
    if (b[index] < 0) {
        invalid("basis-vector right-hand side must be positive");
    }
    const int n = static_cast<int>(layout.input.size());
    for (int q = 0; q < n; ++q) {
        if ((index >> (n - 1 - q)) & 1U) {
            out.append(GateOp::make(GateKind::kX, {layout.input[q]}));
        }
    }
    return out;
}

qsim::Circuit phase_estimation(const DenseMatrix &a, const HhlConfig &config, const Layout &layout) {
    config.validate();
    qsim::Circuit out(layout.num_qubits);
    for (int q : layout.clock) {
        out.append(GateOp::make(GateKind::kH, {q}));
    }
    const int t = static_cast<int>(layout.clock.size());
    for (int m = 0; m < t; ++m) {
        out.append(controlled_power(a, config, layout, layout.clock[m], std::uint64_t{1} << (t - 1 - m)));
    }
    out.append(qsim::inverse_qft(layout.num_qubits, layout.clock));
    return out;
}

std::vector<double> rotation_angles(const HhlConfig &config) {
    const double c = config.rotation_constant_value();
    std::vector<double> out;
    for (int m = 0; m < config.clock_qubits; ++m) {
        double lambda = std::ldexp(1.0, config.clock_qubits - 1 - m) * kTwoPi / config.evolution_time;
        if (config.rotation_mode == RotationMode::kExactArcsin) {
            out.push_back(2.0 * std::asin(std::min(1.0, c / lambda)));
        } else {
            out.push_back(2.0 * c / lambda);
        }
    }
    return out;
}

void check_conditioning(const DenseMatrix &a, const HhlConfig &config) {
    if (!is_hermitian(a)) {
        throw Error(ErrorCode::kNotHermitian, "HHL matrix is not Hermitian");
    }
    auto eig = eigh(a);
    double lo = eig.eigenvalues.front();
    double hi = eig.eigenvalues.back();
    if (lo <= 0.0) {
        throw Error(ErrorCode::kConditioning, "HHL needs a positive-definite matrix");
    }
    double c = config.rotation_constant_value();
    if (c > lo) {
        throw Error(
            ErrorCode::kConditioning,
            "unphysical rotation: C = " + std::to_string(c) + " exceeds the smallest eigenvalue " + std::to_string(lo));
    }
    if (hi * config.evolution_time / kTwoPi >= std::ldexp(1.0, config.clock_qubits)) {
        throw Error(ErrorCode::kConditioning, "largest eigenvalue overflows the clock register");
    }
}

qsim::Circuit build_hhl_circuit(const DenseMatrix &a, std::span<const double> b, const HhlConfig &config) {
    config.validate();
    check_conditioning(a, config);
    auto layout = Layout::make(config.clock_qubits, input_qubits_for(a.dim()));

    qsim::Circuit out(layout.num_qubits);
    out.registers["ancilla"] = {layout.ancilla};
    out.registers["clock"] = layout.clock;
    out.registers["input"] = layout.input;
    out.append(state_preparation(b, layout));
    auto qpe = phase_estimation(a, config, layout);
    out.append(qpe);
    auto angles = rotation_angles(config);
    for (std::size_t m = 0; m < angles.size(); ++m) {
        out.append(GateOp::make(GateKind::kRy, {layout.ancilla}, {angles[m]}, {layout.clock[m]}));
    }
    out.append(qpe.inverse());
    return out;
}

qsim::Circuit build_hhl_circuit(const DenseMatrix &a, const HhlConfig &config) {
    std::vector<double> b(a.dim(), 1.0 / std::sqrt(static_cast<double>(a.dim())));
    return build_hhl_circuit(a, b, config);
}

Rescaled rescale_solution(std::span<const Complex> normalized, std::span<const double> reference) {
    if (normalized.size() != reference.size()) {
        throw Error(ErrorCode::kDimension, "solution and reference lengths differ");
    }
    double ref_norm = vector_norm(reference);
    if (ref_norm == 0.0) {
        invalid("reference vector is zero");
    }
    double v_norm = vector_norm(normalized);
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        overlap += reference[i] * normalized[i];
    }
    Complex unphase = std::abs(overlap) > 0 ? std::conj(overlap / std::abs(overlap)) : Complex{1.0};
    Rescaled out;
    double err = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        double v = v_norm > 0 ? (normalized[i] * unphase).real() / v_norm * ref_norm : 0.0;
        out.rescaled.push_back(v);
        err += (v - reference[i]) * (v - reference[i]);
    }
    out.error_2norm = std::sqrt(err);
    return out;
}

nlohmann::json result_to_json(const HhlResult &r) {
    nlohmann::json j;
    j["success"] = r.success;
    j["postselect_probability"] = r.postselect_probability;
    j["normalized_solution"] = complex_vector_to_json(r.normalized_solution);
    j["rescaled_solution"] = r.rescaled_solution;
    j["error_2norm"] = r.error_2norm;
    j["classical_reference"] = r.classical_reference;
    j["reference_scale"] = r.reference_scale;
    j["classical_solution"] = r.classical_solution;
    j["clock_leakage"] = r.clock_leakage;
    j["measurement"] = r.measurement ? qsim::measurement_to_json(*r.measurement) : nlohmann::json();
    return j;
}

HhlResult result_from_json(const nlohmann::json &j) {
    HhlResult r;
    try {
        r.success = j.at("success").get<bool>();
        r.postselect_probability = j.at("postselect_probability").get<double>();
        r.normalized_solution = complex_vector_from_json(j.at("normalized_solution"));
        r.rescaled_solution = j.at("rescaled_solution").get<std::vector<double>>();
        r.error_2norm = j.at("error_2norm").get<double>();
        r.classical_reference = j.at("classical_reference").get<std::vector<double>>();
        r.reference_scale = j.at("reference_scale").get<double>();
        r.classical_solution = j.at("classical_solution").get<std::vector<double>>();
        r.clock_leakage = j.at("clock_leakage").get<double>();
        if (j.contains("measurement") && !j["measurement"].is_null()) {
            r.measurement = qsim::measurement_from_json(j["measurement"]);
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::kParse, std::string("HHL result: ") + e.what());
    }
    return r;
}

HhlResult run_hhl(const regression::NormalEquations &problem, const HhlConfig &config) {
    const auto &a = problem.a;
    auto circuit = build_hhl_circuit(a, problem.b, config);
    auto layout = Layout::make(config.clock_qubits, input_qubits_for(a.dim()));

    HhlResult result;
    result.classical_solution = regression::solve_least_squares_classical(problem).beta_hat;
    result.classical_reference = reference_from(result.classical_solution, result.reference_scale);

    auto final_state = qsim::run(circuit, qsim::StateVector(layout.num_qubits));
    auto clock_probs = final_state.marginal_probabilities(layout.clock);
    result.clock_leakage = std::max(0.0, 1.0 - clock_probs[0]);

    double p_exact = final_state.probability_of(layout.ancilla, 1);
    if (p_exact < kPostselectFloor) {
        result.postselect_probability = p_exact;
        return result;
    }
    auto post = qsim::postselect(final_state, layout.ancilla, 1);
    auto exact_slice = solution_slice(post.state, layout);
    double slice_norm = vector_norm(exact_slice);

    if (!config.shots) {
        result.postselect_probability = post.probability;
        if (slice_norm < 1e-12) {
            return result;
        }
        for (auto &z : exact_slice) {
            z /= slice_norm;
        }
        result.normalized_solution = exact_slice;
    } else {
        auto record = qsim::sample(final_state, *config.shots, config.seed);
        const int n_in = static_cast<int>(layout.input.size());
        const std::size_t dim = std::size_t{1} << n_in;
        std::vector<double> hits(dim, 0.0);
        double kept = 0.0;
        for (const auto &[bits, count] : record.counts) {
            if (bits[layout.ancilla] != '1') {
                continue;
            }
            std::size_t index = 0;
            for (int q : layout.input) {
                index = (index << 1) | static_cast<std::size_t>(bits[q] == '1');
            }
            hits[index] += static_cast<double>(count);
            kept += static_cast<double>(count);
        }
        result.measurement = std::move(record);
        result.postselect_probability = kept / static_cast<double>(*config.shots);
        if (result.postselect_probability < kPostselectFloor || slice_norm < 1e-12) {
            return result;
        }
        std::size_t peak = 0;
        for (std::size_t i = 1; i < dim; ++i) {
            if (std::abs(exact_slice[i]) > std::abs(exact_slice[peak])) {
                peak = i;
            }
        }
        Complex unphase = std::conj(exact_slice[peak] / std::abs(exact_slice[peak]));
        for (std::size_t i = 0; i < dim; ++i) {
            double sign = (exact_slice[i] * unphase).real() < 0 ? -1.0 : 1.0;
            result.normalized_solution.emplace_back(sign * std::sqrt(hits[i] / kept), 0.0);
        }
    }
    auto rescaled = rescale_solution(result.normalized_solution, result.classical_reference);
    result.rescaled_solution = rescaled.rescaled;
    result.error_2norm = rescaled.error_2norm;
    result.success = true;
    return result;
}

std::vector<double> clock_distribution(const DenseMatrix &a, std::span<const Complex> input, const HhlConfig &config) {
    if (!is_hermitian(a)) {
        throw Error(ErrorCode::kNotHermitian, "phase-estimation matrix is not Hermitian");
    }
    if (input.size() != a.dim()) {
        throw Error(ErrorCode::kDimension, "input state length does not match the matrix");
    }
    auto layout = Layout::make(config.clock_qubits, input_qubits_for(a.dim()));
    // With ancilla and clock in |0⟩ the input register occupies the lowest
    // indices.
    std::vector<Complex> amplitudes(std::size_t{1} << layout.num_qubits, 0.0);
    std::copy(input.begin(), input.end(), amplitudes.begin());
    auto state = qsim::StateVector::normalized(layout.num_qubits, std::move(amplitudes));
    state = qsim::run(phase_estimation(a, config, layout), std::move(state));
    return state.marginal_probabilities(layout.clock);
}

std::vector<double> verify_qpe(const DenseMatrix &a, std::size_t j, const HhlConfig &config) {
    auto eig = eigh(a);
    if (j >= a.dim()) {
        invalid("eigenvector index out of range");
    }
    auto v = eig.eigenvectors.column(j);
    return clock_distribution(a, v, config);
}

}  // namespace qlr::hhl
