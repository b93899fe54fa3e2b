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

#include "qlr/pauli_exponential.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qlr/error.h"

namespace qlr::gloa {

namespace {

using qsim::GateKind;
using qsim::GateOp;

constexpr Pauli kPaulis[4] = {Pauli::kI, Pauli::kX, Pauli::kY, Pauli::kZ};

struct Term {
    Pauli p0;
    Pauli p1;
    double coefficient;
};

/// Coefficients below 1e-13 of the largest are rounding noise.
std::vector<Term> nonidentity_terms(const PauliDecomposition2Q &d) {
    double scale = 0.0;
    for (auto p0 : kPaulis) {
        for (auto p1 : kPaulis) {
            scale = std::max(scale, std::abs(d(p0, p1)));
        }
    }
    std::vector<Term> out;
    for (auto p0 : kPaulis) {
        for (auto p1 : kPaulis) {
            if ((p0 != Pauli::kI || p1 != Pauli::kI) && std::abs(d(p0, p1)) > 1e-13 * scale) {
                out.push_back({p0, p1, d(p0, p1)});
            }
        }
    }
    return out;
}

std::string term_name(const Term &t) {
    return std::string{pauli_name(t.p0), pauli_name(t.p1)};
}

GateKind rotation_for(Pauli p) {
    switch (p) {
        case Pauli::kX:
            return GateKind::kRx;
        case Pauli::kY:
            return GateKind::kRy;
        default:
            return GateKind::kRz;
    }
}

/// Gates taking `p` to Z by conjugation, applied before the ZZ rotation.
void append_to_z_basis(qsim::Circuit &c, Pauli p, int qubit) {
    if (p == Pauli::kX) {
        c.append(GateOp::make(GateKind::kH, {qubit}));
    } else if (p == Pauli::kY) {
        c.append(GateOp::make(GateKind::kV, {qubit}));
    }
}

void append_from_z_basis(qsim::Circuit &c, Pauli p, int qubit) {
    if (p == Pauli::kX) {
        c.append(GateOp::make(GateKind::kH, {qubit}));
    } else if (p == Pauli::kY) {
        c.append(GateOp::make(GateKind::kVdg, {qubit}));
    }
}

}  // namespace

bool paulis_commute(Pauli a0, Pauli a1, Pauli b0, Pauli b1) {
    int clashes = 0;
    clashes += (a0 != Pauli::kI && b0 != Pauli::kI && a0 != b0);
    clashes += (a1 != Pauli::kI && b1 != Pauli::kI && a1 != b1);
    return clashes % 2 == 0;
}

PauliExponentialCircuit build_pauli_exponential_circuit(const DenseMatrix &a, double theta) {
    if (!std::isfinite(theta)) {
        throw Error(ErrorCode::kInvalidArgument, "evolution angle must be finite");
    }
    auto d = pauli_decompose_2q(a);
    auto terms = nonidentity_terms(d);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            if (!paulis_commute(terms[i].p0, terms[i].p1, terms[j].p0, terms[j].p1)) {
                throw Error(
                    ErrorCode::kInvalidArgument,
                    "Pauli terms " + term_name(terms[i]) + " and " + term_name(terms[j]) + " do not commute");
            }
        }
    }

    PauliExponentialCircuit out{qsim::Circuit(2), d(Pauli::kI, Pauli::kI) * theta};
    for (const auto &t : terms) {
        double alpha = t.coefficient * theta;
        if (alpha == 0.0) {
            continue;
        }
        // exp(iασ) = R_σ(-2α) and exp(iα Z⊗Z) = Rzz(-2α).
        if (t.p0 == Pauli::kI || t.p1 == Pauli::kI) {
            int qubit = t.p0 == Pauli::kI ? 1 : 0;
            Pauli p = t.p0 == Pauli::kI ? t.p1 : t.p0;
            out.circuit.append(GateOp::make(rotation_for(p), {qubit}, {-2.0 * alpha}));
            continue;
        }
        append_to_z_basis(out.circuit, t.p0, 0);
        append_to_z_basis(out.circuit, t.p1, 1);
        out.circuit.append(GateOp::make(GateKind::kRzz, {0, 1}, {-2.0 * alpha}));
        append_from_z_basis(out.circuit, t.p0, 0);
        append_from_z_basis(out.circuit, t.p1, 1);
    }
    return out;
}

PauliGeneString pauli_exponential_gene_string(const DenseMatrix &a, double theta) {
    auto pc = build_pauli_exponential_circuit(a, theta);
    GateSet set{{GateKind::kH, GateKind::kV, GateKind::kVdg, GateKind::kRx, GateKind::kRy, GateKind::kRz,
                 GateKind::kRzz}};
    auto index_of = [&](GateKind k) {
        for (std::size_t i = 0; i < set.kinds.size(); ++i) {
            if (set.kinds[i] == k) {
                return static_cast<int>(i) + 1;
            }
        }
        throw Error(ErrorCode::kInternal, "gate kind missing from the Pauli gate set");
    };

    PauliGeneString out{GeneString{2, set, {}}, pc.global_phase};
    for (const auto &op : pc.circuit.gates) {
        GateGene g;
        g.gate_index = index_of(op.kind);
        if (op.kind == GateKind::kRzz) {
            g.control = op.targets[0] + 1;
            g.target = op.targets[1] + 1;
        } else {
            g.target = op.targets[0] + 1;
        }
        if (!op.params.empty()) {
            // R(φ + 2πk) = (-1)^k R(φ).
            g.angle = wrap_angle(op.params[0]);
            double turns = std::round((op.params[0] - g.angle) / (2.0 * std::numbers::pi));
            out.global_phase += turns * std::numbers::pi;
        }
        out.genes.genes.push_back(g);
    }
    if (out.genes.genes.empty()) {
        out.genes.genes.push_back(GateGene{index_of(GateKind::kRz), 1, 0, 0.0});
    }
    return out;
}

}  // namespace qlr::gloa
