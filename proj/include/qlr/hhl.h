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

#ifndef QLR_HHL_H_
#define QLR_HHL_H_

#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qlr/gloa.h"
#include "qlr/numerics.h"
#include "qlr/qsim.h"
#include "qlr/regression.h"

namespace qlr::hhl {

enum class UnitaryMode { kExactSpectral, kGeneString, kExactPauliCircuit };
enum class RotationMode { kExactArcsin, kPaperSmallAngle };

/// "exact-spectral", "gene-string", "exact-pauli-circuit".
std::string_view unitary_mode_name(UnitaryMode mode);
/// Also accepts "exact" and "pauli-circuit".
UnitaryMode unitary_mode_from_name(std::string_view name);
/// "exact-arcsin", "paper-small-angle".
std::string_view rotation_mode_name(RotationMode mode);
/// Also accepts "arcsin" and "paper".
RotationMode rotation_mode_from_name(std::string_view name);

struct HhlConfig {
    int clock_qubits = 4;
    double evolution_time = 2.0 * std::numbers::pi;
    int rotation_resolution = 6;
    /// Defaults to 8π / 2^r.
    std::optional<double> rotation_constant;
    UnitaryMode unitary_mode = UnitaryMode::kExactSpectral;
    RotationMode rotation_mode = RotationMode::kExactArcsin;
    /// Empty means the exact statevector is read out.
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
    /// Approximation of U = exp(iA·t₀/2^t) on the input register, used in
    /// gene-string mode.
    std::optional<gloa::GeneString> gene_string;

    double rotation_constant_value() const;
    /// Throws kInvalidArgument on out-of-range fields.
    void validate() const;

    bool operator==(const HhlConfig &other) const = default;
};

nlohmann::json config_to_json(const HhlConfig &config);
/// Missing keys keep their defaults.
HhlConfig config_from_json(const nlohmann::json &j, HhlConfig base = {});

/// Qubit 0 is the ancilla, then the clock register (most significant
/// first), then the input register.
struct Layout {
    int num_qubits = 0;
    int ancilla = 0;
    std::vector<int> clock;
    std::vector<int> input;

    static Layout make(int clock_qubits, int input_qubits);
};

/// Hadamards on every input qubit for a uniform b, X gates for a basis
/// vector. Other right-hand sides throw kInvalidArgument.
qsim::Circuit state_preparation(std::span<const double> b, const Layout &layout);

/// Hadamards on the clock, clock qubit m controlling U^(2^(t-1-m)), then the
/// inverse QFT on the clock.
qsim::Circuit phase_estimation(const DenseMatrix &a, const HhlConfig &config, const Layout &layout);

/// Ancilla Ry angle controlled by each clock qubit (most significant
/// first). Clock qubit m stands for the eigenvalue 2^(t-1-m)·2π/t₀.
std::vector<double> rotation_angles(const HhlConfig &config);

/// Throws kConditioning when A is not positive definite, when C exceeds
/// the smallest eigenvalue, or when the spectrum overflows the clock.
void check_conditioning(const DenseMatrix &a, const HhlConfig &config);

/// Preparation, phase estimation, controlled rotations and uncomputation.
qsim::Circuit build_hhl_circuit(const DenseMatrix &a, std::span<const double> b, const HhlConfig &config);
/// Uniform right-hand side.
qsim::Circuit build_hhl_circuit(const DenseMatrix &a, const HhlConfig &config);

struct Rescaled {
    std::vector<double> rescaled;
    double error_2norm = 0.0;
};

/// Removes the global phase of `normalized` against `reference`, keeps the
/// real part and scales it to ‖reference‖.
Rescaled rescale_solution(std::span<const Complex> normalized, std::span<const double> reference);

struct HhlResult {
    bool success = false;
    double postselect_probability = 0.0;
    /// Input-register amplitudes after postselection, unit norm.
    std::vector<Complex> normalized_solution;
    std::vector<double> rescaled_solution;
    double error_2norm = 0.0;
    /// Classical solution divided by its smallest nonzero magnitude.
    std::vector<double> classical_reference;
    double reference_scale = 0.0;
    std::vector<double> classical_solution;
    /// Probability of a nonzero clock register in the final state.
    double clock_leakage = 0.0;
    std::optional<qsim::MeasurementRecord> measurement;

    bool operator==(const HhlResult &other) const = default;
};

nlohmann::json result_to_json(const HhlResult &r);
HhlResult result_from_json(const nlohmann::json &j);

/// Runs the circuit and reads out the solution. In sampled mode the
/// magnitudes come from postselected counts and the signs from the exact
/// final state of the same circuit. A postselection probability below 1e-9
/// clears `success` instead of throwing.
HhlResult run_hhl(const regression::NormalEquations &problem, const HhlConfig &config);

/// Clock-register distribution (index MSB first) after phase estimation on
/// `input`.
std::vector<double> clock_distribution(const DenseMatrix &a, std::span<const Complex> input, const HhlConfig &config);
/// clock_distribution for the j-th eigenvector, eigenvalues ascending.
std::vector<double> verify_qpe(const DenseMatrix &a, std::size_t j, const HhlConfig &config);

}  // namespace qlr::hhl

#endif  // QLR_HHL_H_
