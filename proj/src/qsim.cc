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

#include "qlr/qsim.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qlr/error.h"
#include "qlr/rng.h"

namespace qlr::qsim {

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    int qubits;
    int params;
};

constexpr KindInfo kKinds[] = {
    {GateKind::kH, "H", 1, 0},         {GateKind::kX, "X", 1, 0},
    {GateKind::kY, "Y", 1, 0},         {GateKind::kZ, "Z", 1, 0},
    {GateKind::kS, "S", 1, 0},         {GateKind::kSdg, "Sdg", 1, 0},
    {GateKind::kT, "T", 1, 0},         {GateKind::kTdg, "Tdg", 1, 0},
    {GateKind::kV, "V", 1, 0},         {GateKind::kVdg, "Vdg", 1, 0},
    {GateKind::kRx, "Rx", 1, 1},       {GateKind::kRy, "Ry", 1, 1},
    {GateKind::kRz, "Rz", 1, 1},       {GateKind::kPhase, "Phase", 1, 1},
    {GateKind::kRzz, "Rzz", 2, 1},     {GateKind::kCnot, "CNOT", 2, 0},
    {GateKind::kCz, "CZ", 2, 0},       {GateKind::kCPhase, "CPhase", 2, 1},
    {GateKind::kSwap, "SWAP", 2, 0},   {GateKind::kMatrix, "Matrix", 0, 0},
};

const KindInfo &info(GateKind kind) {
    for (const auto &k : kKinds) {
        if (k.kind == kind) {
            return k;
        }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown gate kind");
}

int bit_of(int num_qubits, int qubit) {
    return num_qubits - 1 - qubit;
}

void check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw Error(
            ErrorCode::kInvalidArgument,
            "qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " + std::to_string(num_qubits));
    }
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    return info(kind).name;
}

GateKind gate_kind_from_name(std::string_view name) {
    for (const auto &k : kKinds) {
        if (k.name == name) {
            return k.kind;
        }
    }
    if (name == "Vdag") {
        return GateKind::kVdg;
    }
    if (name == "CX") {
        return GateKind::kCnot;
    }
    if (name == "P") {
        return GateKind::kPhase;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown gate kind '" + std::string(name) + "'");
}

int gate_qubit_count(GateKind kind) {
    return info(kind).qubits;
}

int gate_param_count(GateKind kind) {
    return info(kind).params;
}

bool gate_has_angle(GateKind kind) {
    return info(kind).params == 1;
}

DenseMatrix gate_matrix(GateKind kind, std::span<const double> params) {
    if (kind == GateKind::kMatrix) {
        throw Error(ErrorCode::kInvalidArgument, "matrix-defined gates carry their own matrix");
    }
    const auto &k = info(kind);
    if (static_cast<int>(params.size()) != k.params) {
        throw Error(
            ErrorCode::kInvalidArgument,
            std::string(k.name) + " takes " + std::to_string(k.params) + " parameter(s), got " +
                std::to_string(params.size()));
    }
    const Complex i{0.0, 1.0};
    const double r2 = std::numbers::sqrt2 / 2.0;
    double theta = k.params ? params[0] : 0.0;
    double c = std::cos(theta / 2.0);
    double s = std::sin(theta / 2.0);
    switch (kind) {
        case GateKind::kH:
            return DenseMatrix(2, {r2, r2, r2, -r2});
        case GateKind::kX:
            return pauli_matrix(Pauli::kX);
        case GateKind::kY:
            return pauli_matrix(Pauli::kY);
        case GateKind::kZ:
            return pauli_matrix(Pauli::kZ);
        case GateKind::kS:
            return DenseMatrix(2, {1.0, 0.0, 0.0, i});
        case GateKind::kSdg:
            return DenseMatrix(2, {1.0, 0.0, 0.0, -i});
        case GateKind::kT:
            return DenseMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)});
        case GateKind::kTdg:
            return DenseMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)});
        case GateKind::kV:
            return DenseMatrix(2, {(1.0 + i) / 2.0, (1.0 - i) / 2.0, (1.0 - i) / 2.0, (1.0 + i) / 2.0});
        case GateKind::kVdg:
            return DenseMatrix(2, {(1.0 - i) / 2.0, (1.0 + i) / 2.0, (1.0 + i) / 2.0, (1.0 - i) / 2.0});
        case GateKind::kRx:
            return DenseMatrix(2, {c, -i * s, -i * s, c});
        case GateKind::kRy:
            return DenseMatrix(2, {c, -s, s, c});
        case GateKind::kRz:
            return DenseMatrix(2, {std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2)});
        case GateKind::kPhase:
            return DenseMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, theta)});
        case GateKind::kRzz: {
            DenseMatrix m(4);
            m(0, 0) = m(3, 3) = std::polar(1.0, -theta / 2);
            m(1, 1) = m(2, 2) = std::polar(1.0, theta / 2);
            return m;
        }
        case GateKind::kCnot: {
            DenseMatrix m(4);
            m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
            return m;
        }
        case GateKind::kCz: {
            DenseMatrix m = DenseMatrix::identity(4);
            m(3, 3) = -1.0;
            return m;
        }
        case GateKind::kCPhase: {
            DenseMatrix m = DenseMatrix::identity(4);
            m(3, 3) = std::polar(1.0, theta);
            return m;
        }
        case GateKind::kSwap: {
            DenseMatrix m(4);
            m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
            return m;
        }
        case GateKind::kMatrix:
            break;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown gate kind");
}

GateOp GateOp::make(GateKind kind, std::vector<int> targets, std::vector<double> params, std::vector<int> controls) {
    if (kind == GateKind::kMatrix) {
        throw Error(ErrorCode::kInvalidArgument, "use GateOp::from_matrix for matrix-defined gates");
    }
    GateOp op{kind, std::move(targets), std::move(controls), std::move(params), std::nullopt};
    if (static_cast<int>(op.targets.size()) != gate_qubit_count(kind)) {
        throw Error(
            ErrorCode::kInvalidArgument,
            std::string(gate_kind_name(kind)) + " acts on " + std::to_string(gate_qubit_count(kind)) + " qubit(s)");
    }
    if (static_cast<int>(op.params.size()) != gate_param_count(kind)) {
        throw Error(
            ErrorCode::kInvalidArgument,
            std::string(gate_kind_name(kind)) + " takes " + std::to_string(gate_param_count(kind)) + " parameter(s)");
    }
    return op;
}

GateOp GateOp::from_matrix(DenseMatrix u, std::vector<int> targets, std::vector<int> controls) {
    if (targets.empty() || u.dim() != (std::size_t{1} << targets.size())) {
        throw Error(ErrorCode::kDimension, "matrix dimension must be 2^(number of targets)");
    }
    if (!is_unitary(u, 1e-8)) {
        throw Error(ErrorCode::kNotUnitary, "matrix-defined gate is not unitary");
    }
    return GateOp{GateKind::kMatrix, std::move(targets), std::move(controls), {}, std::move(u)};
}

DenseMatrix GateOp::unitary() const {
    if (kind == GateKind::kMatrix) {
        if (!matrix) {
            throw Error(ErrorCode::kInvalidArgument, "matrix-defined gate without a matrix");
        }
        return *matrix;
    }
    return gate_matrix(kind, params);
}

GateOp GateOp::inverse() const {
    GateOp out = *this;
    switch (kind) {
        case GateKind::kS:
            out.kind = GateKind::kSdg;
            break;
        case GateKind::kSdg:
            out.kind = GateKind::kS;
            break;
        case GateKind::kT:
            out.kind = GateKind::kTdg;
            break;
        case GateKind::kTdg:
            out.kind = GateKind::kT;
            break;
        case GateKind::kV:
            out.kind = GateKind::kVdg;
            break;
        case GateKind::kVdg:
            out.kind = GateKind::kV;
            break;
        case GateKind::kRx:
        case GateKind::kRy:
        case GateKind::kRz:
        case GateKind::kPhase:
        case GateKind::kRzz:
        case GateKind::kCPhase:
            out.params[0] = -params[0];
            break;
        case GateKind::kMatrix:
            out.matrix = matrix->adjoint();
            break;
        default:
            break;
    }
    return out;
}

void GateOp::validate(int num_qubits) const {
    std::size_t expected = kind == GateKind::kMatrix ? 0 : static_cast<std::size_t>(gate_qubit_count(kind));
    if (kind == GateKind::kMatrix) {
        if (!matrix || targets.empty() || matrix->dim() != (std::size_t{1} << targets.size())) {
            throw Error(ErrorCode::kInvalidArgument, "matrix-defined gate has inconsistent matrix and targets");
        }
    } else if (targets.size() != expected) {
        throw Error(ErrorCode::kInvalidArgument, std::string(gate_kind_name(kind)) + " has the wrong number of targets");
    }
    if (kind != GateKind::kMatrix && static_cast<int>(params.size()) != gate_param_count(kind)) {
        throw Error(ErrorCode::kInvalidArgument, std::string(gate_kind_name(kind)) + " has the wrong number of parameters");
    }
    std::vector<int> all = targets;
    all.insert(all.end(), controls.begin(), controls.end());
    for (int q : all) {
        if (q < 0 || q >= num_qubits) {
            throw Error(
                ErrorCode::kInvalidArgument,
                "qubit index " + std::to_string(q) + " out of range for " + std::to_string(num_qubits) + " qubits");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw Error(ErrorCode::kInvalidArgument, "gate targets and controls must be distinct qubits");
    }
}

void Circuit::append(GateOp op) {
    op.validate(num_qubits);
    gates.push_back(std::move(op));
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits > num_qubits) {
        throw Error(ErrorCode::kInvalidArgument, "appended circuit uses more qubits");
    }
    for (const auto &g : other.gates) {
        append(g);
    }
}

Circuit Circuit::inverse() const {
    Circuit out(num_qubits);
    out.registers = registers;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.gates.push_back(it->inverse());
    }
    return out;
}

void Circuit::validate() const {
    check_qubit_count(num_qubits);
    for (const auto &g : gates) {
        g.validate(num_qubits);
    }
}

Circuit Circuit::embedded(int new_num_qubits, std::span<const int> qubit_map, std::span<const int> extra_controls) const {
    if (static_cast<int>(qubit_map.size()) != num_qubits) {
        throw Error(ErrorCode::kInvalidArgument, "qubit map must cover every qubit of the circuit");
    }
    Circuit out(new_num_qubits);
    for (const auto &g : gates) {
        GateOp op = g;
        for (auto &t : op.targets) {
            t = qubit_map[t];
        }
        for (auto &c : op.controls) {
            c = qubit_map[c];
        }
        op.controls.insert(op.controls.end(), extra_controls.begin(), extra_controls.end());
        out.append(std::move(op));
    }
    return out;
}

StateVector::StateVector(int num_qubits, std::uint64_t index) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, 0.0);
    if (index >= amplitudes_.size()) {
        throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
    }
    amplitudes_[index] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(num_qubits);
    if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw Error(ErrorCode::kDimension, "state needs 2^n amplitudes");
    }
    if (std::abs(norm() - 1.0) > 1e-10) {
        throw Error(ErrorCode::kInvalidArgument, "state amplitudes must have unit norm");
    }
}

StateVector StateVector::normalized(int num_qubits, std::vector<Complex> amplitudes) {
    double n = vector_norm(std::span<const Complex>(amplitudes));
    if (n == 0.0 || !std::isfinite(n)) {
        throw Error(ErrorCode::kInvalidArgument, "cannot normalize a zero state");
    }
    for (auto &a : amplitudes) {
        a /= n;
    }
    return StateVector(num_qubits, std::move(amplitudes));
}

double StateVector::norm() const {
    return vector_norm(std::span<const Complex>(amplitudes_));
}

void StateVector::apply(const GateOp &op) {
    op.validate(num_qubits_);
    apply_matrix(op.unitary(), op.targets, op.controls);
}

void StateVector::apply_matrix(const DenseMatrix &u, std::span<const int> targets, std::span<const int> controls) {
    apply_matrix_to_amplitudes(amplitudes_, num_qubits_, u, targets, controls);
}

void apply_matrix_to_amplitudes(std::span<Complex> amplitudes, int num_qubits, const DenseMatrix &u,
                                std::span<const int> targets, std::span<const int> controls) {
    const std::size_t k = targets.size();
    const std::size_t local_dim = std::size_t{1} << k;
    if (k == 0 || u.dim() != local_dim) {
        throw Error(ErrorCode::kDimension, "gate matrix does not match its target count");
    }
    if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
        throw Error(ErrorCode::kDimension, "amplitude array does not match the qubit count");
    }
    std::uint64_t target_mask = 0;
    std::uint64_t control_mask = 0;
    std::vector<std::uint64_t> offsets(local_dim, 0);
    for (std::size_t j = 0; j < k; ++j) {
        if (targets[j] < 0 || targets[j] >= num_qubits) {
            throw Error(ErrorCode::kInvalidArgument, "target qubit out of range");
        }
        std::uint64_t bit = std::uint64_t{1} << bit_of(num_qubits, targets[j]);
        if (target_mask & bit) {
            throw Error(ErrorCode::kInvalidArgument, "repeated target qubit");
        }
        target_mask |= bit;
        for (std::size_t l = 0; l < local_dim; ++l) {
            if ((l >> (k - 1 - j)) & 1) {
                offsets[l] |= bit;
            }
        }
    }
    for (int c : controls) {
        if (c < 0 || c >= num_qubits) {
            throw Error(ErrorCode::kInvalidArgument, "control qubit out of range");
        }
        control_mask |= std::uint64_t{1} << bit_of(num_qubits, c);
    }
    if (target_mask & control_mask) {
        throw Error(ErrorCode::kInvalidArgument, "gate targets and controls overlap");
    }

    const std::uint64_t size = amplitudes.size();
    if (k == 1) {
        const Complex m00 = u(0, 0), m01 = u(0, 1), m10 = u(1, 0), m11 = u(1, 1);
        const std::uint64_t off = offsets[1];
        for (std::uint64_t base = 0; base < size; ++base) {
            if ((base & target_mask) || (base & control_mask) != control_mask) {
                continue;
            }
            Complex a0 = amplitudes[base];
            Complex a1 = amplitudes[base | off];
            amplitudes[base] = m00 * a0 + m01 * a1;
            amplitudes[base | off] = m10 * a0 + m11 * a1;
        }
        return;
    }
    std::vector<Complex> in(local_dim);
    for (std::uint64_t base = 0; base < size; ++base) {
        if ((base & target_mask) || (base & control_mask) != control_mask) {
            continue;
        }
        for (std::size_t l = 0; l < local_dim; ++l) {
            in[l] = amplitudes[base | offsets[l]];
        }
        for (std::size_t r = 0; r < local_dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < local_dim; ++c) {
                acc += u(r, c) * in[c];
            }
            amplitudes[base | offsets[r]] = acc;
        }
    }
}

std::vector<double> StateVector::marginal_probabilities(std::span<const int> qubits) const {
    std::vector<double> out(std::size_t{1} << qubits.size(), 0.0);
    for (std::uint64_t index = 0; index < amplitudes_.size(); ++index) {
        std::uint64_t local = 0;
        for (int q : qubits) {
            local = (local << 1) | ((index >> bit_of(num_qubits_, q)) & 1);
        }
        out[local] += std::norm(amplitudes_[index]);
    }
    return out;
}

double StateVector::probability_of(int qubit, int outcome) const {
    const int qubits[] = {qubit};
    return marginal_probabilities(qubits)[outcome ? 1 : 0];
}

StateVector apply_gate(StateVector state, const GateOp &op) {
    state.apply(op);
    return state;
}

StateVector apply_controlled_unitary(StateVector state, const DenseMatrix &u, std::span<const int> controls,
                                     std::span<const int> targets) {
    if (!is_unitary(u, 1e-8)) {
        throw Error(ErrorCode::kNotUnitary, "controlled unitary is not unitary");
    }
    GateOp op = GateOp::from_matrix(u, {targets.begin(), targets.end()}, {controls.begin(), controls.end()});
    state.apply(op);
    return state;
}

Circuit qft(int num_qubits, std::span<const int> reg) {
    if (reg.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "QFT register must not be empty");
    }
    Circuit c(num_qubits);
    const int n = static_cast<int>(reg.size());
    for (int i = 0; i < n; ++i) {
        c.append(GateOp::make(GateKind::kH, {reg[i]}));
        for (int j = i + 1; j < n; ++j) {
            double angle = 2.0 * std::numbers::pi / static_cast<double>(std::uint64_t{1} << (j - i + 1));
            c.append(GateOp::make(GateKind::kCPhase, {reg[j], reg[i]}, {angle}));
        }
    }
    for (int i = 0; i < n / 2; ++i) {
        c.append(GateOp::make(GateKind::kSwap, {reg[i], reg[n - 1 - i]}));
    }
    return c;
}

Circuit inverse_qft(int num_qubits, std::span<const int> reg) {
    return qft(num_qubits, reg).inverse();
}

StateVector run(const Circuit &c, StateVector initial) {
    if (c.num_qubits != initial.num_qubits()) {
        throw Error(ErrorCode::kDimension, "circuit and state have different qubit counts");
    }
    for (const auto &g : c.gates) {
        initial.apply(g);
    }
    return initial;
}

DenseMatrix circuit_unitary(const Circuit &c) {
    check_qubit_count(c.num_qubits);
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    DenseMatrix out(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        auto state = run(c, StateVector(c.num_qubits, col));
        for (std::size_t row = 0; row < dim; ++row) {
            out(row, col) = state[row];
        }
    }
    return out;
}

std::string bitstring(std::uint64_t index, int width) {
    std::string s(width, '0');
    for (int k = 0; k < width; ++k) {
        if ((index >> (width - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

MeasurementRecord sample(const StateVector &state, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw Error(ErrorCode::kInvalidArgument, "shots must be at least 1");
    }
    auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double running = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        running += std::norm(amps[k]);
        cdf[k] = running;
    }
    std::vector<std::uint64_t> tally(amps.size(), 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        double u = rng.uniform() * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t index = std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
        // Never land on a zero-probability outcome through rounding at the top.
        while (index > 0 && std::norm(amps[index]) == 0.0) {
            --index;
        }
        ++tally[index];
    }
    MeasurementRecord record{shots, seed, {}};
    for (std::size_t k = 0; k < tally.size(); ++k) {
        if (tally[k]) {
            record.counts[bitstring(k, state.num_qubits())] = tally[k];
        }
    }
    return record;
}

PostselectResult postselect(const StateVector &state, int qubit, int outcome) {
    const int n = state.num_qubits();
    if (qubit < 0 || qubit >= n) {
        throw Error(ErrorCode::kInvalidArgument, "postselection qubit out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << bit_of(n, qubit);
    std::vector<Complex> kept(state.amplitudes().begin(), state.amplitudes().end());
    double probability = 0.0;
    for (std::uint64_t index = 0; index < kept.size(); ++index) {
        bool matches = ((index & bit) != 0) == (outcome != 0);
        if (matches) {
            probability += std::norm(kept[index]);
        } else {
            kept[index] = 0.0;
        }
    }
    if (probability <= 1e-12) {
        throw Error(
            ErrorCode::kPostselection,
            "postselection on qubit " + std::to_string(qubit) + " = " + std::to_string(outcome) +
                " has zero probability");
    }
    return {StateVector::normalized(n, std::move(kept)), probability};
}

nlohmann::json gate_to_json(const GateOp &op) {
    nlohmann::json j = {
        {"kind", gate_kind_name(op.kind)},
        {"targets", op.targets},
        {"controls", op.controls},
        {"params", op.params},
    };
    if (op.kind == GateKind::kMatrix && op.matrix) {
        j["matrix"] = matrix_to_json(*op.matrix);
    }
    return j;
}

GateOp gate_from_json(const nlohmann::json &j) {
    try {
        auto kind = gate_kind_from_name(j.at("kind").get<std::string>());
        auto targets = j.at("targets").get<std::vector<int>>();
        auto controls = j.value("controls", std::vector<int>{});
        auto params = j.value("params", std::vector<double>{});
        if (kind == GateKind::kMatrix) {
            return GateOp::from_matrix(matrix_from_json(j.at("matrix")), targets, controls);
        }
        return GateOp::make(kind, targets, params, controls);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::kParse, std::string("gate JSON: ") + e.what());
    }
}

nlohmann::json circuit_to_json(const Circuit &c) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &g : c.gates) {
        out.push_back(gate_to_json(g));
    }
    return out;
}

Circuit circuit_from_json(const nlohmann::json &j, std::optional<int> num_qubits) {
    if (!j.is_array()) {
        throw Error(ErrorCode::kParse, "circuit JSON must be a list of gates");
    }
    std::vector<GateOp> ops;
    int highest = -1;
    for (const auto &g : j) {
        ops.push_back(gate_from_json(g));
        for (int q : ops.back().targets) {
            highest = std::max(highest, q);
        }
        for (int q : ops.back().controls) {
            highest = std::max(highest, q);
        }
    }
    Circuit c(num_qubits.value_or(std::max(highest + 1, 1)));
    check_qubit_count(c.num_qubits);
    for (auto &op : ops) {
        c.append(std::move(op));
    }
    return c;
}

nlohmann::json measurement_to_json(const MeasurementRecord &m) {
    return {{"shots", m.shots}, {"seed", m.seed}, {"counts", m.counts}};
}

MeasurementRecord measurement_from_json(const nlohmann::json &j) {
    try {
        MeasurementRecord m;
        m.shots = j.at("shots").get<std::uint64_t>();
        m.seed = j.at("seed").get<std::uint64_t>();
        m.counts = j.at("counts").get<std::map<std::string, std::uint64_t>>();
        return m;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::kParse, std::string("measurement JSON: ") + e.what());
    }
}

}  // namespace qlr::qsim
