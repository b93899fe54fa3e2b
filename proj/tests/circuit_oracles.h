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

#ifndef QLR_TESTS_CIRCUIT_ORACLES_H_
#define QLR_TESTS_CIRCUIT_ORACLES_H_

#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

#include "qlr/qsim.h"
#include "test_util.h"

namespace qlr::testing {

using qsim::Circuit;
using qsim::GateKind;
using qsim::GateOp;

/// Full-register matrix of one gate, built entry by entry from the gate's
/// definition with qubit 0 as the most significant bit.
inline DenseMatrix brute_force_gate(const GateOp &op, int n) {
    const std::size_t dim = std::size_t{1} << n;
    auto u = op.unitary();
    auto bit = [&](std::size_t x, int q) { return (x >> (n - 1 - q)) & 1U; };
    DenseMatrix out(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        bool active = true;
        for (int c : op.controls) {
            active = active && bit(x, c) == 1;
        }
        if (!active) {
            out(x, x) = 1;
            continue;
        }
        std::size_t local_in = 0;
        for (int t : op.targets) {
            local_in = (local_in << 1) | bit(x, t);
        }
        for (std::size_t local_out = 0; local_out < u.dim(); ++local_out) {
            std::size_t y = x;
            int k = static_cast<int>(op.targets.size());
            for (int t : op.targets) {
                --k;
                std::size_t mask = std::size_t{1} << (n - 1 - t);
                y = ((local_out >> k) & 1U) ? (y | mask) : (y & ~mask);
            }
            out(y, x) += u(local_out, local_in);
        }
    }
    return out;
}

inline DenseMatrix brute_force_circuit(const Circuit &c) {
    DenseMatrix out = DenseMatrix::identity(std::size_t{1} << c.num_qubits);
    for (const auto &op : c.gates) {
        out = naive_product(brute_force_gate(op, c.num_qubits), out);
    }
    return out;
}

inline qsim::GateOp random_gate(int n, std::mt19937_64 &gen, bool allow_matrix) {
    static const GateKind kinds[] = {GateKind::kH,  GateKind::kX,   GateKind::kY,    GateKind::kZ,     GateKind::kS,
                                     GateKind::kT,  GateKind::kV,   GateKind::kVdg,  GateKind::kRx,    GateKind::kRy,
                                     GateKind::kRz, GateKind::kRzz, GateKind::kCnot, GateKind::kCz,    GateKind::kCPhase,
                                     GateKind::kSwap, GateKind::kPhase, GateKind::kSdg, GateKind::kTdg};
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
    std::vector<int> qubits(n);
    for (int q = 0; q < n; ++q) {
        qubits[q] = q;
    }
    std::shuffle(qubits.begin(), qubits.end(), gen);
    if (allow_matrix && gen() % 8 == 0 && n >= 2) {
        auto u = qlr::testing::random_unitary(4, gen);
        return GateOp::from_matrix(u, {qubits[0], qubits[1]}, n >= 3 ? std::vector<int>{qubits[2]} : std::vector<int>{});
    }
    GateKind kind = kinds[gen() % std::size(kinds)];
    int width = qsim::gate_qubit_count(kind);
    if (width > n) {
        kind = GateKind::kH;
        width = 1;
    }
    std::vector<int> targets(qubits.begin(), qubits.begin() + width);
    std::vector<double> params;
    for (int p = 0; p < qsim::gate_param_count(kind); ++p) {
        params.push_back(angle(gen));
    }
    std::vector<int> controls;
    if (width + 1 <= n && gen() % 3 == 0) {
        controls.push_back(qubits[width]);
    }
    return GateOp::make(kind, targets, params, controls);
}

inline qsim::Circuit random_circuit(int n, int gates, std::mt19937_64 &gen, bool allow_matrix = true) {
    Circuit c(n);
    for (int g = 0; g < gates; ++g) {
        c.append(random_gate(n, gen, allow_matrix));
    }
    return c;
}

}  // namespace qlr::testing

#endif  // QLR_TESTS_CIRCUIT_ORACLES_H_
