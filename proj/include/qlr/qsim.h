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

#ifndef QLR_QSIM_H_
#define QLR_QSIM_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qlr/numerics.h"

/// Dense statevector simulation.
///
/// Qubit 0 is the most significant bit of a basis-state index, and a gate
/// acting on targets {a, b} sees a local index whose most significant bit is
/// qubit a. Bitstrings are always written most significant first.
namespace qlr::qsim {

inline constexpr int kMaxQubits = 12;

enum class GateKind {
    kH,
    kX,
    kY,
    kZ,
    kS,
    kSdg,
    kT,
    kTdg,
    kV,
    kVdg,
    kRx,
    kRy,
    kRz,
    kPhase,
    kRzz,
    kCnot,
    kCz,
    kCPhase,
    kSwap,
    kMatrix,
};

std::string_view gate_kind_name(GateKind kind);
/// Case-sensitive inverse of gate_kind_name; also accepts "Vdag", "CX", "P".
GateKind gate_kind_from_name(std::string_view name);
/// Number of target qubits; 0 for kMatrix (determined by its matrix).
int gate_qubit_count(GateKind kind);
int gate_param_count(GateKind kind);
bool gate_has_angle(GateKind kind);

/// Rotations use the half-angle form, e.g. Ry(θ) = [[cos θ/2, -sin θ/2],
/// [sin θ/2, cos θ/2]] and Rzz(θ) = exp(-iθ/2 Z⊗Z). Phase(θ) = diag(1, e^{iθ}).
DenseMatrix gate_matrix(GateKind kind, std::span<const double> params = {});

struct GateOp {
    GateKind kind = GateKind::kH;
    std::vector<int> targets;
    std::vector<int> controls;
    std::vector<double> params;
    /// Only for kMatrix.
    std::optional<DenseMatrix> matrix;

    static GateOp make(GateKind kind, std::vector<int> targets, std::vector<double> params = {},
                       std::vector<int> controls = {});
    /// Matrix-defined gate. Throws kNotUnitary at 1e-8.
    static GateOp from_matrix(DenseMatrix u, std::vector<int> targets, std::vector<int> controls = {});

    /// Matrix on the targets, without controls.
    DenseMatrix unitary() const;
    GateOp inverse() const;
    /// Throws kInvalidArgument if the op is malformed for `num_qubits`.
    void validate(int num_qubits) const;

    bool operator==(const GateOp &other) const = default;
};

struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> gates;
    std::map<std::string, std::vector<int>> registers;

    explicit Circuit(int num_qubits = 0) : num_qubits(num_qubits) {
    }

    void append(GateOp op);
    void append(const Circuit &other);
    /// Gate-wise inverse in reverse order.
    Circuit inverse() const;
    void validate() const;
    /// Copy whose qubit q is relabelled `qubit_map[q]` inside a register of
    /// `num_qubits`, with `extra_controls` added to every gate.
    Circuit embedded(int num_qubits, std::span<const int> qubit_map, std::span<const int> extra_controls = {}) const;
};

class StateVector {
   public:
    /// |index⟩ on `num_qubits` qubits.
    explicit StateVector(int num_qubits, std::uint64_t index = 0);
    /// Throws unless the amplitudes have unit norm to 1e-10.
    StateVector(int num_qubits, std::vector<Complex> amplitudes);
    /// Rescales to unit norm first; throws on a zero vector.
    static StateVector normalized(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Complex &operator[](std::uint64_t index) const {
        return amplitudes_[index];
    }
    double norm() const;

    void apply(const GateOp &op);
    /// `u` on `targets` wherever every control qubit is |1⟩.
    void apply_matrix(const DenseMatrix &u, std::span<const int> targets, std::span<const int> controls = {});

    /// Probabilities of the basis states of `qubits` (first listed = MSB).
    std::vector<double> marginal_probabilities(std::span<const int> qubits) const;
    double probability_of(int qubit, int outcome) const;

   private:
    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Applies `u` on `targets` of a raw amplitude array over `num_qubits`
/// qubits (any norm) wherever every control qubit is |1⟩.
void apply_matrix_to_amplitudes(std::span<Complex> amplitudes, int num_qubits, const DenseMatrix &u,
                                std::span<const int> targets, std::span<const int> controls = {});

StateVector apply_gate(StateVector state, const GateOp &op);
/// Throws kNotUnitary when `u` deviates from unitarity by more than 1e-8.
StateVector apply_controlled_unitary(StateVector state, const DenseMatrix &u, std::span<const int> controls,
                                     std::span<const int> targets);

/// QFT on `reg`, first listed qubit most significant. Includes the final swaps.
Circuit qft(int num_qubits, std::span<const int> reg);
Circuit inverse_qft(int num_qubits, std::span<const int> reg);

StateVector run(const Circuit &c, StateVector initial);

/// Matrix of a circuit on at most 12 qubits, assembled column by column.
DenseMatrix circuit_unitary(const Circuit &c);

std::string bitstring(std::uint64_t index, int width);

struct MeasurementRecord {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::map<std::string, std::uint64_t> counts;

    bool operator==(const MeasurementRecord &other) const = default;
};

/// Multinomial draw of `shots` full-register measurements, deterministic in
/// `seed`.
MeasurementRecord sample(const StateVector &state, std::uint64_t shots, std::uint64_t seed);

struct PostselectResult {
    StateVector state;
    double probability;
};

/// Conditions `qubit` on `outcome` and renormalizes. Throws kPostselection
/// when the outcome probability is at most 1e-12.
PostselectResult postselect(const StateVector &state, int qubit, int outcome);

nlohmann::json gate_to_json(const GateOp &op);
GateOp gate_from_json(const nlohmann::json &j);
/// JSON list of {kind, targets, controls, params} (plus "matrix" for
/// matrix-defined gates).
nlohmann::json circuit_to_json(const Circuit &c);
/// `num_qubits` defaults to one more than the highest referenced index.
Circuit circuit_from_json(const nlohmann::json &j, std::optional<int> num_qubits = std::nullopt);
nlohmann::json measurement_to_json(const MeasurementRecord &m);
MeasurementRecord measurement_from_json(const nlohmann::json &j);

}  // namespace qlr::qsim

#endif  // QLR_QSIM_H_
