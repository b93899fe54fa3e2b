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

#ifndef QLR_PAULI_EXPONENTIAL_H_
#define QLR_PAULI_EXPONENTIAL_H_

#include "qlr/gloa.h"
#include "qlr/numerics.h"
#include "qlr/qsim.h"

namespace qlr::gloa {

/// exp(iAθ) = e^{i global_phase} · circuit.
struct PauliExponentialCircuit {
    qsim::Circuit circuit;
    double global_phase = 0.0;
};

/// Two Pauli strings commute iff they differ (both non-identity) on an even
/// number of positions.
bool paulis_commute(Pauli a0, Pauli a1, Pauli b0, Pauli b1);

/// One factor per nonzero Pauli term of the 4×4 Hermitian `a`, in the order
/// of the decomposition table. Weight-two terms are a ZZ rotation between
/// basis changes (H for X, V/V† for Y); weight-one terms are single-qubit
/// rotations; the identity term goes into the global phase. Throws
/// kInvalidArgument naming the first non-commuting pair.
PauliExponentialCircuit build_pauli_exponential_circuit(const DenseMatrix &a, double theta);

struct PauliGeneString {
    GeneString genes;
    double global_phase = 0.0;
};

/// Same circuit over the gate set H, V, Vdg, Rx, Ry, Rz, Rzz with angles
/// wrapped into [0, 2π); each wrap is folded into the global phase.
PauliGeneString pauli_exponential_gene_string(const DenseMatrix &a, double theta);

}  // namespace qlr::gloa

#endif  // QLR_PAULI_EXPONENTIAL_H_
