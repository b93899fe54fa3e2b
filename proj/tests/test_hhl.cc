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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qlr/hhl.h"
#include "qlr/pauli_exponential.h"
#include "test_util.h"

using namespace qlr;
using namespace qlr::hhl;

namespace {

constexpr double kPi = std::numbers::pi;

regression::NormalEquations fixture_problem() {
    return {qlr::testing::fixture_a(), {0.5, 0.5, 0.5, 0.5}, {"b1", "b2", "b3", "b4"}};
}

regression::NormalEquations diagonal_problem(std::vector<double> diag, std::vector<double> b) {
    DenseMatrix a(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        a(i, i) = diag[i];
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return {a, std::move(b), names};
}

std::vector<double> basis(std::size_t n, std::size_t k) {
    std::vector<double> v(n, 0.0);
    v[k] = 1.0;
    return v;
}

double distance(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

}  // namespace

TEST(hhl, exact_mode_solves_fixture) {
    auto r = run_hhl(fixture_problem(), HhlConfig{});
    ASSERT_TRUE(r.success);
    const std::vector<double> expected = {-1, 7, 11, 13};
    EXPECT_LT(distance(r.rescaled_solution, expected), 1e-6);
    EXPECT_LT(r.error_2norm, 1e-6);
    EXPECT_LT(distance(r.classical_reference, expected), 1e-12);
    EXPECT_NEAR(r.reference_scale, 1.0 / 32, 1e-14);
    EXPECT_LT(r.clock_leakage, 1e-9);
    EXPECT_FALSE(r.measurement.has_value());
}

TEST(hhl, small_angle_rotation_reproduces_reported_vector) {
    HhlConfig c;
    c.rotation_mode = RotationMode::kPaperSmallAngle;
    auto r = run_hhl(fixture_problem(), c);
    ASSERT_TRUE(r.success);
    const std::vector<double> reported = {-0.8425, 6.9604, 10.9980, 13.0341};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(r.rescaled_solution[i], reported[i], 5e-4) << i;
    }
    EXPECT_NEAR(r.error_2norm, 0.1660, 5e-4);
}

TEST(hhl, all_unitary_modes_agree_on_statevector) {
    HhlConfig c;
    auto exact = run_hhl(fixture_problem(), c);
    c.unitary_mode = UnitaryMode::kExactPauliCircuit;
    auto pauli = run_hhl(fixture_problem(), c);
    c.unitary_mode = UnitaryMode::kGeneString;
    c.gene_string = gloa::pauli_exponential_gene_string(qlr::testing::fixture_a(), c.evolution_time / 16).genes;
    auto genes = run_hhl(fixture_problem(), c);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(pauli.rescaled_solution[i], exact.rescaled_solution[i], 1e-9);
        EXPECT_NEAR(genes.rescaled_solution[i], exact.rescaled_solution[i], 1e-9);
    }
    EXPECT_NEAR(genes.postselect_probability, exact.postselect_probability, 1e-12);
}

TEST(hhl, gene_string_mode_requires_string) {
    HhlConfig c;
    c.unitary_mode = UnitaryMode::kGeneString;
    EXPECT_QLR_ERROR(run_hhl(fixture_problem(), c), ErrorCode::kInvalidArgument);
}

TEST(rescale_solution, examples) {
    const std::vector<double> ref = {-1, 7, 11, 13};
    double n = std::sqrt(340.0);
    std::vector<Complex> exact;
    for (double x : ref) {
        exact.emplace_back(x / n, 0);
    }
    auto r = rescale_solution(exact, ref);
    EXPECT_LT(distance(r.rescaled, ref), 1e-12);
    EXPECT_LT(r.error_2norm, 1e-12);

    std::vector<Complex> flipped;
    for (double x : ref) {
        flipped.push_back(std::polar(x / n, 0.0) * std::polar(1.0, 2.1));
    }
    EXPECT_LT(rescale_solution(flipped, ref).error_2norm, 1e-12);

    const std::vector<double> reported = {-0.8425, 6.9604, 10.9980, 13.0341};
    double rn = distance(reported, std::vector<double>(4, 0.0));
    std::vector<Complex> normalized;
    for (double x : reported) {
        normalized.emplace_back(-x / rn, 0);
    }
    EXPECT_NEAR(rescale_solution(normalized, ref).error_2norm, 0.1660, 5e-4);

    EXPECT_QLR_ERROR(rescale_solution(exact, std::vector<double>{1, 2}), ErrorCode::kDimension);
}

TEST(rotation, angles_per_clock_qubit) {
    HhlConfig c;
    double C = c.rotation_constant_value();
    EXPECT_NEAR(C, kPi / 8, 1e-15);
    auto angles = rotation_angles(c);
    ASSERT_EQ(angles.size(), 4u);
    for (int m = 0; m < 4; ++m) {
        double lambda = std::ldexp(1.0, 3 - m);
        EXPECT_NEAR(angles[m], 2 * std::asin(C / lambda), 1e-15) << m;
    }
    c.rotation_mode = RotationMode::kPaperSmallAngle;
    angles = rotation_angles(c);
    for (int m = 0; m < 4; ++m) {
        EXPECT_NEAR(angles[m], 2 * C / std::ldexp(1.0, 3 - m), 1e-15) << m;
    }
    c.rotation_resolution = 5;
    EXPECT_NEAR(c.rotation_constant_value(), kPi / 4, 1e-15);
}

TEST(hhl, unit_eigenvalue_postselects_with_c_squared) {
    HhlConfig c;
    auto r = run_hhl(diagonal_problem({1, 2, 4, 8}, basis(4, 0)), c);
    double C = c.rotation_constant_value();
    EXPECT_NEAR(r.postselect_probability, C * C, 1e-12);
    EXPECT_NEAR(std::abs(r.normalized_solution[0]), 1.0, 1e-12);
}

TEST(hhl, every_diagonal_with_every_basis_vector) {
    const std::vector<double> levels = {1, 2, 4, 8};
    HhlConfig c;
    double C = c.rotation_constant_value();
    for (double d0 : levels) {
        for (double d1 : levels) {
            std::vector<double> diag = {d0, d1, d0 * d1 <= 8 ? d0 * d1 : 1, 2};
            for (std::size_t k = 0; k < 4; ++k) {
                auto r = run_hhl(diagonal_problem(diag, basis(4, k)), c);
                ASSERT_TRUE(r.success);
                EXPECT_NEAR(r.postselect_probability, C * C / (diag[k] * diag[k]), 1e-12);
                for (std::size_t i = 0; i < 4; ++i) {
                    EXPECT_NEAR(std::abs(r.normalized_solution[i]), i == k ? 1.0 : 0.0, 1e-12);
                }
                EXPECT_LT(r.error_2norm, 1e-9);
            }
        }
    }
}

TEST(hhl, postselection_matches_spectral_sum) {
    auto p = fixture_problem();
    HhlConfig c;
    double C = c.rotation_constant_value();
    auto eig = eigh(p.a);
    double expected = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        Complex beta = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            beta += std::conj(eig.eigenvectors(i, j)) * p.b[i];
        }
        expected += std::norm(beta * C / eig.eigenvalues[j]);
    }
    auto r = run_hhl(p, c);
    EXPECT_NEAR(r.postselect_probability, expected, 1e-12);

    HhlConfig half = c;
    half.rotation_constant = C / 2;
    EXPECT_NEAR(run_hhl(p, half).postselect_probability, r.postselect_probability / 4, 1e-12);
}

TEST(hhl, circuit_layout) {
    HhlConfig c;
    auto circuit = build_hhl_circuit(qlr::testing::fixture_a(), c);
    EXPECT_EQ(circuit.num_qubits, 7);
    EXPECT_EQ(circuit.registers.at("ancilla"), std::vector<int>{0});
    EXPECT_EQ(circuit.registers.at("clock"), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(circuit.registers.at("input"), (std::vector<int>{5, 6}));
    EXPECT_TRUE(is_unitary(circuit_unitary(circuit), 1e-10));
    auto layout = Layout::make(3, 3);
    EXPECT_EQ(layout.num_qubits, 7);
    EXPECT_EQ(layout.input, (std::vector<int>{4, 5, 6}));
}

TEST(hhl, state_preparation_kinds) {
    auto layout = Layout::make(4, 2);
    auto uniform = state_preparation(std::vector<double>{0.5, 0.5, 0.5, 0.5}, layout);
    auto s = qsim::run(uniform, qsim::StateVector(7, 0));
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(s[i].real(), 0.5, 1e-15);
    }
    auto e2 = state_preparation(std::vector<double>{0, 0, 3, 0}, layout);
    EXPECT_NEAR(std::abs(qsim::run(e2, qsim::StateVector(7, 0))[2]), 1.0, 1e-15);
    EXPECT_QLR_ERROR(state_preparation(std::vector<double>{1, 2, 0, 0}, layout), ErrorCode::kInvalidArgument);
    EXPECT_QLR_ERROR(state_preparation(std::vector<double>{0, -1, 0, 0}, layout), ErrorCode::kInvalidArgument);
}

TEST(verify_qpe, eigenvectors_map_to_one_clock_state) {
    auto a = qlr::testing::fixture_a();
    HhlConfig c;
    const std::size_t expected_state[] = {1, 2, 4, 8};
    for (std::size_t j = 0; j < 4; ++j) {
        auto dist = verify_qpe(a, j, c);
        ASSERT_EQ(dist.size(), 16u);
        EXPECT_NEAR(dist[expected_state[j]], 1.0, 1e-12) << j;
    }
    const double listed_eigenvalue[] = {8, 4, 2, 1};
    auto listed = qlr::testing::listed_eigenvectors();
    for (std::size_t k = 0; k < 4; ++k) {
        std::vector<Complex> v;
        for (auto z : listed[k]) {
            v.push_back(z / 2.0);
        }
        auto dist = clock_distribution(a, v, c);
        EXPECT_NEAR(dist[static_cast<std::size_t>(listed_eigenvalue[k])], 1.0, 1e-12) << k;
    }
    std::vector<Complex> b(4, Complex(0.5, 0));
    auto dist = clock_distribution(a, b, c);
    for (std::size_t w : {1, 2, 4, 8}) {
        EXPECT_NEAR(dist[w], 0.25, 1e-12);
    }
    EXPECT_QLR_ERROR(verify_qpe(a, 4, c), ErrorCode::kInvalidArgument);
}

TEST(conditioning, rejected_problems) {
    HhlConfig c;
    auto nh = DenseMatrix::from_rows({{1, 2}, {0, 1}});
    EXPECT_QLR_ERROR(check_conditioning(nh, c), ErrorCode::kNotHermitian);
    EXPECT_QLR_ERROR(check_conditioning(DenseMatrix::from_rows({{1, 0}, {0, -2}}), c), ErrorCode::kConditioning);
    EXPECT_QLR_ERROR(check_conditioning(DenseMatrix::from_rows({{0.1, 0}, {0, 1}}), c), ErrorCode::kConditioning);
    EXPECT_QLR_ERROR(check_conditioning(DenseMatrix::from_rows({{1, 0}, {0, 20}}), c), ErrorCode::kConditioning);
    EXPECT_NO_THROW(check_conditioning(qlr::testing::fixture_a(), c));
    EXPECT_QLR_ERROR(run_hhl(diagonal_problem({1, 2, 4, 20}, basis(4, 0)), c), ErrorCode::kConditioning);
}

TEST(config, validation_and_json) {
    HhlConfig c;
    c.clock_qubits = 5;
    c.rotation_constant = 0.2;
    c.unitary_mode = UnitaryMode::kExactPauliCircuit;
    c.rotation_mode = RotationMode::kPaperSmallAngle;
    c.shots = 1000;
    c.seed = 99;
    c.gene_string = gloa::pauli_exponential_gene_string(qlr::testing::fixture_a(), 0.2).genes;
    EXPECT_EQ(config_from_json(config_to_json(c)), c);
    EXPECT_EQ(config_from_json(config_to_json(HhlConfig{})), HhlConfig{});
    EXPECT_EQ(config_from_json(nlohmann::json::object()), HhlConfig{});
    EXPECT_EQ(unitary_mode_from_name("exact"), UnitaryMode::kExactSpectral);
    EXPECT_EQ(rotation_mode_from_name("paper"), RotationMode::kPaperSmallAngle);
    EXPECT_QLR_ERROR(unitary_mode_from_name("magic"), ErrorCode::kInvalidArgument);

    HhlConfig bad;
    bad.clock_qubits = 0;
    EXPECT_QLR_ERROR(bad.validate(), ErrorCode::kInvalidArgument);
    bad = HhlConfig{};
    bad.shots = 0;
    EXPECT_QLR_ERROR(bad.validate(), ErrorCode::kInvalidArgument);
    bad = HhlConfig{};
    bad.evolution_time = -1;
    EXPECT_QLR_ERROR(bad.validate(), ErrorCode::kInvalidArgument);
}

TEST(hhl, sampled_mode_is_seed_deterministic) {
    HhlConfig c;
    c.shots = 20000;
    c.seed = 3;
    auto a = run_hhl(fixture_problem(), c);
    auto b = run_hhl(fixture_problem(), c);
    EXPECT_EQ(a, b);
    ASSERT_TRUE(a.measurement.has_value());
    EXPECT_EQ(a.measurement->shots, 20000u);
    c.seed = 4;
    EXPECT_NE(run_hhl(fixture_problem(), c).measurement, a.measurement);
    EXPECT_LT(a.error_2norm, 1.0);
    EXPECT_EQ(result_from_json(result_to_json(a)), a);
}
