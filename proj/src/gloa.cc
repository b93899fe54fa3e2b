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

#include "qlr/gloa.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qlr/error.h"

namespace qlr::gloa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxGeneQubits = qsim::kMaxQubits / 2;

bool is_two_qubit(qsim::GateKind kind) {
    return qsim::gate_qubit_count(kind) == 2;
}

[[noreturn]] void invalid(const std::string &what) {
    throw Error(ErrorCode::kInvalidArgument, what);
}

std::string trim(std::string_view s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return {};
    }
    auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

int rounded_clamp(double value, int lo, int hi) {
    auto r = static_cast<long long>(std::llround(value));
    return static_cast<int>(std::clamp<long long>(r, lo, hi));
}

/// Uniform control choice for `kind` on `target`, honouring "0 = none".
int random_control(qsim::GateKind kind, int target, int num_qubits, Rng &rng) {
    std::vector<int> options;
    if (!is_two_qubit(kind)) {
        options.push_back(0);
    }
    for (int q = 1; q <= num_qubits; ++q) {
        if (q != target) {
            options.push_back(q);
        }
    }
    return options[rng.below(options.size())];
}

double fidelity_of(const GeneString &gs, const DenseMatrix &target) {
    return trace_fidelity(string_to_unitary(gs), target);
}

}  // namespace

GateSet GateSet::default_set() {
    using K = qsim::GateKind;
    return {{K::kRx, K::kRy, K::kRz, K::kRzz, K::kX, K::kZ, K::kH, K::kV, K::kVdg, K::kCnot, K::kCz}};
}

GateSet GateSet::single_qubit_default() {
    GateSet out;
    for (auto k : default_set().kinds) {
        if (!is_two_qubit(k)) {
            out.kinds.push_back(k);
        }
    }
    return out;
}

GateSet GateSet::parse(std::string_view list) {
    GateSet out;
    std::string item;
    std::istringstream in{std::string(list)};
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        auto kind = qsim::gate_kind_from_name(item);
        if (kind == qsim::GateKind::kMatrix) {
            invalid("matrix-defined gates cannot be part of a gate set");
        }
        out.kinds.push_back(kind);
    }
    if (out.kinds.empty()) {
        invalid("gate set must not be empty");
    }
    return out;
}

std::string GateSet::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        if (k) {
            out += ',';
        }
        out += qsim::gate_kind_name(kinds[k]);
    }
    return out;
}

qsim::GateKind GateSet::kind(int gate_index) const {
    if (gate_index < 1 || gate_index > static_cast<int>(kinds.size())) {
        invalid("gate index " + std::to_string(gate_index) + " outside the gate set");
    }
    return kinds[gate_index - 1];
}

bool GeneString::is_valid_gene(const GateGene &g) const {
    if (g.gate_index < 1 || g.gate_index > static_cast<int>(gate_set.size())) {
        return false;
    }
    if (g.target < 1 || g.target > num_qubits || g.control < 0 || g.control > num_qubits) {
        return false;
    }
    if (g.control == g.target) {
        return false;
    }
    if (is_two_qubit(gate_set.kind(g.gate_index)) && g.control == 0) {
        return false;
    }
    return std::isfinite(g.angle) && g.angle >= 0.0 && g.angle < kTwoPi;
}

void GeneString::validate() const {
    if (num_qubits < 1 || num_qubits > kMaxGeneQubits) {
        invalid("gene strings support 1 to " + std::to_string(kMaxGeneQubits) + " qubits");
    }
    if (gate_set.kinds.empty()) {
        invalid("gene string has an empty gate set");
    }
    if (genes.empty()) {
        invalid("gene string must contain at least one gene");
    }
    for (std::size_t k = 0; k < genes.size(); ++k) {
        if (!is_valid_gene(genes[k])) {
            const auto &g = genes[k];
            invalid(
                "gene " + std::to_string(k + 1) + " (" + std::to_string(g.gate_index) + " " + std::to_string(g.target) +
                " " + std::to_string(g.control) + " " + std::to_string(g.angle) + ") is invalid");
        }
    }
}

void GloaParams::validate() const {
    if (groups < 1 || members < 1) {
        invalid("GLOA needs at least one group and one member");
    }
    if (max_gates < 1 || max_gates > kMaxGenes) {
        invalid("max_gates must be in [1, " + std::to_string(kMaxGenes) + "]");
    }
    if (num_qubits < 1 || num_qubits > kMaxGeneQubits) {
        invalid("GLOA supports 1 to " + std::to_string(kMaxGeneQubits) + " qubits");
    }
    if (gate_set.kinds.empty()) {
        invalid("gate set must not be empty");
    }
    for (auto k : gate_set.kinds) {
        if (k == qsim::GateKind::kMatrix) {
            invalid("matrix-defined gates cannot be part of a gate set");
        }
        if (is_two_qubit(k) && num_qubits < 2) {
            invalid(std::string(qsim::gate_kind_name(k)) + " needs at least two qubits");
        }
    }
    if (r1 < 0 || r2 < 0 || r3 < 0 || std::abs(r1 + r2 + r3 - 1.0) > 1e-12) {
        invalid("mutation weights must be non-negative with r1 + r2 + r3 = 1");
    }
    if (!(fidelity_threshold > 0.0 && fidelity_threshold <= 1.0)) {
        invalid("fidelity threshold must be in (0, 1]");
    }
    if (max_iterations < 0) {
        invalid("max_iterations must be non-negative");
    }
}

qsim::Circuit to_circuit(const GeneString &gs) {
    gs.validate();
    qsim::Circuit c(gs.num_qubits);
    for (const auto &g : gs.genes) {
        auto kind = gs.gate_set.kind(g.gate_index);
        std::vector<double> params;
        if (qsim::gate_has_angle(kind)) {
            params.push_back(g.angle);
        }
        if (is_two_qubit(kind)) {
            c.append(qsim::GateOp::make(kind, {g.control - 1, g.target - 1}, params));
        } else if (g.control != 0) {
            c.append(qsim::GateOp::make(kind, {g.target - 1}, params, {g.control - 1}));
        } else {
            c.append(qsim::GateOp::make(kind, {g.target - 1}, params));
        }
    }
    return c;
}

DenseMatrix string_to_unitary(const GeneString &gs) {
    // The row-major matrix is a vector over 2n qubits whose leading n qubits
    // index rows, so a gate on qubit q of the circuit is the same gate on
    // qubit q of that vector.
    auto circuit = to_circuit(gs);
    const int n = gs.num_qubits;
    const std::size_t dim = std::size_t{1} << n;
    DenseMatrix u = DenseMatrix::identity(dim);
    for (const auto &op : circuit.gates) {
        qsim::apply_matrix_to_amplitudes(u.entries(), 2 * n, op.unitary(), op.targets, op.controls);
    }
    return u;
}

double trace_fidelity(const DenseMatrix &approx, const DenseMatrix &target) {
    if (approx.dim() != target.dim()) {
        throw Error(ErrorCode::kDimension, "trace_fidelity: dimensions differ");
    }
    Complex total = 0.0;
    auto a = approx.entries();
    auto t = target.entries();
    for (std::size_t k = 0; k < a.size(); ++k) {
        total += t[k] * std::conj(a[k]);
    }
    return std::min(1.0, std::abs(total) / static_cast<double>(approx.dim()));
}

double global_phase_offset(const DenseMatrix &approx, const DenseMatrix &target) {
    if (approx.dim() != target.dim()) {
        throw Error(ErrorCode::kDimension, "global_phase_offset: dimensions differ");
    }
    Complex total = 0.0;
    auto a = approx.entries();
    auto t = target.entries();
    for (std::size_t k = 0; k < a.size(); ++k) {
        total += t[k] * std::conj(a[k]);
    }
    return std::arg(total);
}

double wrap_angle(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0) {
        w += kTwoPi;
    }
    return w >= kTwoPi ? 0.0 : w;
}

GateGene random_gene(const GloaParams &params, Rng &rng) {
    GateGene g;
    g.gate_index = static_cast<int>(rng.between(1, static_cast<std::int64_t>(params.gate_set.size())));
    g.target = static_cast<int>(rng.between(1, params.num_qubits));
    g.control = random_control(params.gate_set.kind(g.gate_index), g.target, params.num_qubits, rng);
    g.angle = rng.uniform(0.0, kTwoPi);
    return g;
}

GeneString random_gene_string(const GloaParams &params, Rng &rng) {
    params.validate();
    GeneString gs{params.num_qubits, params.gate_set, {}};
    gs.genes.reserve(params.max_gates);
    for (int k = 0; k < params.max_gates; ++k) {
        gs.genes.push_back(random_gene(params, rng));
    }
    return gs;
}

GeneString combine(const GeneString &member, const GeneString &leader, const GeneString &random,
                   const GloaParams &params, Rng &rng) {
    if (member.genes.size() != leader.genes.size() || member.genes.size() != random.genes.size() ||
        member.num_qubits != leader.num_qubits || member.num_qubits != random.num_qubits) {
        invalid("member, leader and random strings must have the same shape");
    }
    const int n = member.num_qubits;
    const int set_size = static_cast<int>(member.gate_set.size());
    GeneString out = member;
    for (std::size_t k = 0; k < member.genes.size(); ++k) {
        const auto &m = member.genes[k];
        const auto &l = leader.genes[k];
        const auto &r = random.genes[k];
        GateGene &g = out.genes[k];
        g.gate_index =
            rounded_clamp(params.r1 * m.gate_index + params.r2 * l.gate_index + params.r3 * r.gate_index, 1, set_size);
        g.target = rounded_clamp(params.r1 * m.target + params.r2 * l.target + params.r3 * r.target, 1, n);
        auto kind = member.gate_set.kind(g.gate_index);
        int control_lo = is_two_qubit(kind) ? 1 : 0;
        g.control =
            rounded_clamp(params.r1 * m.control + params.r2 * l.control + params.r3 * r.control, control_lo, n);
        if (g.control == g.target) {
            g.control = random_control(kind, g.target, n, rng);
        }
        g.angle = wrap_angle(params.r1 * m.angle + params.r2 * l.angle + params.r3 * r.angle);
    }
    return out;
}

GeneString mutate(const GeneString &member, const GeneString &leader, const GloaParams &params, Rng &rng) {
    GloaParams shape = params;
    shape.num_qubits = member.num_qubits;
    shape.gate_set = member.gate_set;
    shape.max_gates = static_cast<int>(member.genes.size());
    GeneString random = random_gene_string(shape, rng);
    return combine(member, leader, random, params, rng);
}

void Population::elect_leaders() {
    leaders.assign(groups.size(), 0);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto &f = fidelities[g];
        leaders[g] = static_cast<std::size_t>(std::max_element(f.begin(), f.end()) - f.begin());
    }
}

bool Population::leaders_consistent() const {
    if (leaders.size() != groups.size()) {
        return false;
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (double f : fidelities[g]) {
            if (f > fidelities[g][leaders[g]]) {
                return false;
            }
        }
    }
    return true;
}

std::pair<std::size_t, std::size_t> Population::best() const {
    std::pair<std::size_t, std::size_t> out{0, 0};
    double top = -1.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        double f = fidelities[g][leaders[g]];
        if (f > top) {
            top = f;
            out = {g, leaders[g]};
        }
    }
    return out;
}

Population initial_population(const DenseMatrix &target, const GloaParams &params, std::span<Rng> group_rngs) {
    params.validate();
    if (group_rngs.size() != static_cast<std::size_t>(params.groups)) {
        invalid("need one random stream per group");
    }
    if (target.dim() != (std::size_t{1} << params.num_qubits)) {
        throw Error(ErrorCode::kDimension, "target dimension does not match the GLOA qubit count");
    }
    Population pop;
    pop.groups.resize(params.groups);
    pop.fidelities.resize(params.groups);
    for (int g = 0; g < params.groups; ++g) {
        for (int m = 0; m < params.members; ++m) {
            pop.groups[g].push_back(random_gene_string(params, group_rngs[g]));
            pop.fidelities[g].push_back(fidelity_of(pop.groups[g].back(), target));
        }
    }
    pop.elect_leaders();
    return pop;
}

void mutation_phase(Population &pop, const DenseMatrix &target, const GloaParams &params, std::span<Rng> group_rngs) {
    // Groups only read their own members and leader, so they are independent.
    for (std::size_t g = 0; g < pop.groups.size(); ++g) {
        const GeneString leader = pop.groups[g][pop.leaders[g]];
        for (std::size_t m = 0; m < pop.groups[g].size(); ++m) {
            GeneString candidate = mutate(pop.groups[g][m], leader, params, group_rngs[g]);
            double f = fidelity_of(candidate, target);
            if (f > pop.fidelities[g][m]) {
                pop.groups[g][m] = std::move(candidate);
                pop.fidelities[g][m] = f;
            }
        }
    }
    pop.elect_leaders();
}

Population crossover(Population pop, const DenseMatrix &target, const GloaParams & /*params*/, Rng &rng) {
    const auto groups = static_cast<std::int64_t>(pop.groups.size());
    for (std::size_t i = 0; i < pop.groups.size(); ++i) {
        const auto members = static_cast<std::int64_t>(pop.groups[i].size());
        const auto genes = static_cast<std::int64_t>(pop.groups[i][0].genes.size());
        const std::int64_t transfers = rng.between(1, std::max<std::int64_t>(1, 2 * genes - 1));
        for (std::int64_t t = 0; t < transfers; ++t) {
            auto x = static_cast<std::size_t>(rng.below(groups));
            auto k = static_cast<std::size_t>(rng.below(members));
            auto pr = rng.below(4 * genes);
            if (k >= pop.groups[x].size()) {
                continue;
            }
            GeneString candidate = pop.groups[i][k];
            GateGene &gene = candidate.genes[pr / 4];
            const GateGene &donor = pop.groups[x][k].genes[pr / 4];
            switch (pr % 4) {
                case 0:
                    gene.gate_index = donor.gate_index;
                    break;
                case 1:
                    gene.target = donor.target;
                    break;
                case 2:
                    gene.control = donor.control;
                    break;
                default:
                    gene.angle = donor.angle;
                    break;
            }
            // A transferred index can clash with the recipient's other fields;
            // such transfers are dropped rather than repaired.
            if (!candidate.is_valid_gene(gene)) {
                continue;
            }
            double f = fidelity_of(candidate, target);
            if (f > pop.fidelities[i][k]) {
                pop.groups[i][k] = std::move(candidate);
                pop.fidelities[i][k] = f;
            }
        }
    }
    pop.elect_leaders();
    return pop;
}

EvolveResult evolve(const DenseMatrix &target, const GloaParams &params) {
    params.validate();
    if (!is_unitary(target, 1e-8)) {
        throw Error(ErrorCode::kNotUnitary, "GLOA target is not unitary");
    }
    std::vector<Rng> group_rngs;
    group_rngs.reserve(params.groups);
    for (int g = 0; g < params.groups; ++g) {
        group_rngs.push_back(Rng::stream(params.seed, static_cast<std::uint64_t>(g)));
    }
    Rng crossover_rng = Rng::stream(params.seed, static_cast<std::uint64_t>(params.groups));

    Population pop = initial_population(target, params, group_rngs);
    auto [bg, bm] = pop.best();
    EvolveResult result{pop.groups[bg][bm], pop.fidelities[bg][bm], 0, {pop.fidelities[bg][bm]}};

    while (result.fidelity < params.fidelity_threshold && result.iterations < params.max_iterations) {
        mutation_phase(pop, target, params, group_rngs);
        pop = crossover(std::move(pop), target, params, crossover_rng);
        ++result.iterations;
        auto [g, m] = pop.best();
        if (pop.fidelities[g][m] > result.fidelity) {
            result.best = pop.groups[g][m];
            result.fidelity = pop.fidelities[g][m];
        }
        result.history.push_back(result.fidelity);
    }
    return result;
}

namespace {

/// Phase-aligned Hilbert-Schmidt distance: min over φ of ‖U_t - e^{iφ}U_a‖_F.
double aligned_distance(double fidelity, std::size_t dim) {
    double n = static_cast<double>(dim);
    return std::sqrt(std::max(0.0, 2.0 * n * (1.0 - fidelity)));
}

}  // namespace

GeneString refine_angles(const GeneString &gs, const DenseMatrix &target, double tol) {
    gs.validate();
    if (target.dim() != (std::size_t{1} << gs.num_qubits)) {
        throw Error(ErrorCode::kDimension, "refine_angles: target dimension does not match the gene string");
    }
    GeneString best = gs;
    double best_fid = fidelity_of(best, target);
    const std::size_t dim = target.dim();

    auto fid_with = [&](std::size_t k, double angle) {
        GeneString trial = best;
        trial.genes[k].angle = wrap_angle(angle);
        return fidelity_of(trial, target);
    };

    constexpr int kMinSweeps = 3;
    constexpr int kMaxSweeps = 200;
    constexpr int kGrid = 24;
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double before = aligned_distance(best_fid, dim);
        for (std::size_t k = 0; k < best.genes.size(); ++k) {
            if (!qsim::gate_has_angle(best.gate_set.kind(best.genes[k].gate_index))) {
                continue;
            }
            // The fidelity is a single-peaked sinusoid of each angle on a
            // 2π period, so a coarse grid brackets the peak.
            double center = best.genes[k].angle;
            double center_fid = best_fid;
            const double step = 2.0 * std::numbers::pi / kGrid;
            for (int s = 1; s < kGrid; ++s) {
                double a = best.genes[k].angle + s * step;
                double f = fid_with(k, a);
                if (f > center_fid) {
                    center_fid = f;
                    center = a;
                }
            }
            double lo = center - step;
            double hi = center + step;
            double x1 = hi - golden * (hi - lo);
            double x2 = lo + golden * (hi - lo);
            double f1 = fid_with(k, x1);
            double f2 = fid_with(k, x2);
            while (hi - lo > 1e-12) {
                if (f1 < f2) {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + golden * (hi - lo);
                    f2 = fid_with(k, x2);
                } else {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - golden * (hi - lo);
                    f1 = fid_with(k, x1);
                }
            }
            double candidate = 0.5 * (lo + hi);
            double f = fid_with(k, candidate);
            if (center_fid > f) {
                f = center_fid;
                candidate = center;
            }
            if (f > best_fid) {
                best.genes[k].angle = wrap_angle(candidate);
                best_fid = fidelity_of(best, target);
            }
        }
        double after = aligned_distance(best_fid, dim);
        if (sweep + 1 >= kMinSweeps && before - after < tol) {
            break;
        }
    }
    return best;
}

std::string to_text(const GeneString &gs) {
    std::ostringstream out;
    out << "qubits=" << gs.num_qubits << " gateset=" << gs.gate_set.to_string() << "\n";
    out.precision(17);
    for (const auto &g : gs.genes) {
        out << g.gate_index << ' ' << g.target << ' ' << g.control << ' ' << g.angle << "\n";
    }
    return out.str();
}

GeneString parse_gene_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_number = 0;
    GeneString gs;
    bool have_header = false;
    auto fail = [&](const std::string &what) {
        throw Error(ErrorCode::kParse, "gene string line " + std::to_string(line_number) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_number;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!have_header) {
            std::istringstream header(line);
            std::string field;
            bool have_qubits = false;
            bool have_set = false;
            while (header >> field) {
                if (field.rfind("qubits=", 0) == 0) {
                    try {
                        gs.num_qubits = std::stoi(field.substr(7));
                    } catch (const std::exception &) {
                        fail("bad qubit count");
                    }
                    have_qubits = true;
                } else if (field.rfind("gateset=", 0) == 0) {
                    try {
                        gs.gate_set = GateSet::parse(field.substr(8));
                    } catch (const Error &e) {
                        fail(e.what());
                    }
                    have_set = true;
                } else {
                    fail("unknown header field '" + field + "'");
                }
            }
            if (!have_qubits || !have_set) {
                fail("header must be 'qubits=<n> gateset=<list>'");
            }
            have_header = true;
            continue;
        }
        std::istringstream row(line);
        GateGene g;
        std::string extra;
        if (!(row >> g.gate_index >> g.target >> g.control >> g.angle) || (row >> extra)) {
            fail("expected '<gate> <target> <control> <angle>'");
        }
        gs.genes.push_back(g);
    }
    if (!have_header) {
        throw Error(ErrorCode::kParse, "gene string is empty");
    }
    try {
        gs.validate();
    } catch (const Error &e) {
        throw Error(ErrorCode::kParse, e.what());
    }
    return gs;
}

GeneString load_gene_string(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::kIo, "cannot open gene string '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_gene_string(buffer.str());
}

void save_gene_string(const GeneString &gs, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::kIo, "cannot write gene string '" + path + "'");
    }
    out << to_text(gs);
}

}  // namespace qlr::gloa
