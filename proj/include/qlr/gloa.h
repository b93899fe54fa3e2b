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

#ifndef QLR_GLOA_H_
#define QLR_GLOA_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlr/numerics.h"
#include "qlr/qsim.h"
#include "qlr/rng.h"

/// Group Leaders Optimization over bounded gate strings.
namespace qlr::gloa {

/// Gate kinds available to the genome; gene gate indices are 1-based
/// positions in `kinds`.
struct GateSet {
    std::vector<qsim::GateKind> kinds;

    /// Rx, Ry, Rz, Rzz, X, Z, H, V, Vdg, CNOT, CZ.
    static GateSet default_set();
    /// Default set without its two-qubit kinds.
    static GateSet single_qubit_default();
    /// Comma-separated gate names, e.g. "Rx,Rzz,CNOT".
    static GateSet parse(std::string_view list);
    std::string to_string() const;

    std::size_t size() const {
        return kinds.size();
    }
    qsim::GateKind kind(int gate_index) const;
    bool operator==(const GateSet &other) const = default;
};

/// <gate index> <target> <control> <angle>, qubits numbered from 1 and
/// control 0 meaning "none". Two-qubit kinds (Rzz, CNOT, CZ, ...) act on
/// (control, target) and require a control; single-qubit kinds become
/// controlled gates when a control is given. Kinds without an angle ignore
/// the angle field.
struct GateGene {
    int gate_index = 1;
    int target = 1;
    int control = 0;
    double angle = 0.0;

    bool operator==(const GateGene &other) const = default;
};

struct GeneString {
    int num_qubits = 1;
    GateSet gate_set;
    std::vector<GateGene> genes;

    /// Throws kInvalidArgument on the first invalid gene.
    void validate() const;
    bool is_valid_gene(const GateGene &gene) const;
    bool operator==(const GeneString &other) const = default;
};

inline constexpr int kMaxGenes = 20;

struct GloaParams {
    int groups = 15;
    int members = 25;
    int max_gates = kMaxGenes;
    int num_qubits = 2;
    GateSet gate_set = GateSet::default_set();
    double r1 = 0.8;
    double r2 = 0.1;
    double r3 = 0.1;
    double fidelity_threshold = 0.999;
    int max_iterations = 10000;
    std::uint64_t seed = 0;

    /// Throws kInvalidArgument, e.g. when r1 + r2 + r3 != 1.
    void validate() const;
};

qsim::Circuit to_circuit(const GeneString &gs);
/// Ordered product of the genes' gate matrices (first gene applied first).
DenseMatrix string_to_unitary(const GeneString &gs);

/// (1/N) |Tr(U_t U_a†)|.
double trace_fidelity(const DenseMatrix &approx, const DenseMatrix &target);
/// φ with approx ≈ e^{-iφ} target, i.e. arg Tr(U_t U_a†).
double global_phase_offset(const DenseMatrix &approx, const DenseMatrix &target);

/// Wraps into [0, 2π).
double wrap_angle(double angle);

GateGene random_gene(const GloaParams &params, Rng &rng);
/// `max_gates` uniformly random genes.
GeneString random_gene_string(const GloaParams &params, Rng &rng);

/// Weighted combination r1*member + r2*leader + r3*random of every field.
/// Discrete fields are rounded and clamped; a control that lands on the
/// target is redrawn uniformly from `rng`. Angles are wrapped.
GeneString combine(const GeneString &member, const GeneString &leader, const GeneString &random,
                   const GloaParams &params, Rng &rng);

/// combine() with a freshly drawn random string. Acceptance is up to the
/// caller.
GeneString mutate(const GeneString &member, const GeneString &leader, const GloaParams &params, Rng &rng);

struct Population {
    std::vector<std::vector<GeneString>> groups;
    std::vector<std::size_t> leaders;
    std::vector<std::vector<double>> fidelities;

    void elect_leaders();
    /// Every leader holds the highest fidelity of its group.
    bool leaders_consistent() const;
    /// Group and member index of the best string overall.
    std::pair<std::size_t, std::size_t> best() const;
};

Population initial_population(const DenseMatrix &target, const GloaParams &params, std::span<Rng> group_rngs);

/// Mutates every member, keeping a mutant only if it raises that member's
/// fidelity. Leaders are re-elected afterwards.
void mutation_phase(Population &pop, const DenseMatrix &target, const GloaParams &params, std::span<Rng> group_rngs);

/// One-way parameter transfers between groups, kept only on improvement.
Population crossover(Population pop, const DenseMatrix &target, const GloaParams &params, Rng &rng);

struct EvolveResult {
    GeneString best;
    double fidelity = 0.0;
    int iterations = 0;
    /// history[0] is the initial population; history[k] the best after
    /// iteration k.
    std::vector<double> history;
};

EvolveResult evolve(const DenseMatrix &target, const GloaParams &params);

/// Coordinate-wise golden-section search over every angle-carrying gene,
/// minimizing the phase-aligned Hilbert-Schmidt distance to `target`.
/// Stops after at least three sweeps once a sweep improves the distance by
/// less than `tol`. Never lowers the trace fidelity.
GeneString refine_angles(const GeneString &gs, const DenseMatrix &target, double tol = 1e-12);

/// Text form: header `qubits=<n> gateset=<comma-list>`, then one gene per
/// line.
std::string to_text(const GeneString &gs);
GeneString parse_gene_string(std::string_view text);
GeneString load_gene_string(const std::string &path);
void save_gene_string(const GeneString &gs, const std::string &path);

}  // namespace qlr::gloa

#endif  // QLR_GLOA_H_
