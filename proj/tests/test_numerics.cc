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
#include <random>

#include "qlr/numerics.h"
#include "test_util.h"

using namespace qlr;
using qlr::testing::fixture_a;
using qlr::testing::naive_product;
using qlr::testing::random_hermitian;

namespace {

/// exp(iAt) by scaling and squaring of a Taylor series.
DenseMatrix taylor_exp_i(const DenseMatrix &a, double t) {
    std::size_t n = a.dim();
    int squarings = 0;
    double scale = a.frobenius_norm() * std::abs(t);
    while (scale > 0.25) {
        scale /= 2;
        ++squarings;
    }
    DenseMatrix x = a * Complex(0, t / std::ldexp(1.0, squarings));
    DenseMatrix sum = DenseMatrix::identity(n);
    DenseMatrix term = DenseMatrix::identity(n);
    for (int k = 1; k < 30; ++k) {
        term = naive_product(term, x) * Complex(1.0 / k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = naive_product(sum, sum);
    }
    return sum;
}

double frobenius_of_difference(const DenseMatrix &a, const DenseMatrix &b) {
    double s = 0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        s += std::norm(a.entries()[k] - b.entries()[k]);
    }
    return std::sqrt(s);
}

DenseMatrix reconstruct(const HermitianEigenSystem &es) {
    std::size_t n = es.eigenvalues.size();
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0;
            for (std::size_t k = 0; k < n; ++k) {
                s += es.eigenvectors(i, k) * es.eigenvalues[k] * std::conj(es.eigenvectors(j, k));
            }
            out(i, j) = s;
        }
    }
    return out;
}

}  // namespace

TEST(DenseMatrix, rejects_bad_shapes) {
    EXPECT_QLR_ERROR(DenseMatrix(0), ErrorCode::kDimension);
    EXPECT_QLR_ERROR(DenseMatrix(2, std::vector<Complex>(3)), ErrorCode::kDimension);
    EXPECT_QLR_ERROR(DenseMatrix(1, std::vector<Complex>{Complex(NAN, 0)}), ErrorCode::kInvalidArgument);
}

TEST(DenseMatrix, product_matches_naive) {
    std::mt19937_64 gen(3);
    auto a = random_hermitian(5, gen);
    auto b = random_hermitian(5, gen);
    EXPECT_LT(max_abs_difference(a * b, naive_product(a, b)), 1e-12);
}

TEST(is_hermitian, examples) {
    EXPECT_TRUE(is_hermitian(fixture_a(), 1e-12));
    EXPECT_TRUE(is_hermitian(DenseMatrix::identity(4), 0));
    auto upper = DenseMatrix::from_rows({{0, 1}, {0, 0}});
    EXPECT_FALSE(is_hermitian(upper, 1e-12));
    EXPECT_FALSE(is_hermitian(DenseMatrix::from_rows({{0, Complex(0, 1)}, {Complex(0, 1), 0}}), 1e-12));
}

TEST(eigh, fixture_spectrum) {
    auto es = eigh(fixture_a());
    const double expected[] = {1, 2, 4, 8};
    ASSERT_EQ(es.eigenvalues.size(), 4u);
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(es.eigenvalues[k], expected[k], 1e-10);
    }
}

TEST(eigh, identity) {
    auto es = eigh(DenseMatrix::identity(5));
    for (double v : es.eigenvalues) {
        EXPECT_NEAR(v, 1.0, 1e-14);
    }
}

TEST(eigh, random_reconstruction_and_orthonormality) {
    std::mt19937_64 gen(11);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u}) {
        for (int rep = 0; rep < 5; ++rep) {
            auto a = random_hermitian(n, gen);
            auto es = eigh(a);
            EXPECT_LE(frobenius_of_difference(reconstruct(es), a) / a.frobenius_norm(), 1e-10) << n;
            for (std::size_t k = 1; k < n; ++k) {
                EXPECT_LE(es.eigenvalues[k - 1], es.eigenvalues[k]);
            }
            auto gram = naive_product(es.eigenvectors.adjoint(), es.eigenvectors);
            EXPECT_LT(max_abs_difference(gram, DenseMatrix::identity(n)), 1e-10);
        }
    }
}

TEST(eigh, degenerate_spectrum) {
    std::mt19937_64 gen(5);
    auto u = qlr::testing::random_unitary(4, gen);
    const double d[] = {2, 2, 2, 5};
    auto a = naive_product(naive_product(u, DenseMatrix::diagonal(d)), u.adjoint());
    auto es = eigh(a);
    EXPECT_NEAR(es.eigenvalues[0], 2, 1e-10);
    EXPECT_NEAR(es.eigenvalues[2], 2, 1e-10);
    EXPECT_NEAR(es.eigenvalues[3], 5, 1e-10);
    EXPECT_LE(frobenius_of_difference(reconstruct(es), a) / a.frobenius_norm(), 1e-10);
}

TEST(eigh, rejects_non_hermitian) {
    EXPECT_QLR_ERROR(eigh(DenseMatrix::from_rows({{0, 1}, {0, 0}})), ErrorCode::kNotHermitian);
}

TEST(matrix_exp_i, zero_time_is_identity) {
    EXPECT_LT(max_abs_difference(matrix_exp_i(fixture_a(), 0.0), DenseMatrix::identity(4)), 1e-14);
}

TEST(matrix_exp_i, listed_eigenvector_picks_up_its_phase) {
    // The last listed pattern belongs to eigenvalue 1.
    std::vector<Complex> u{-0.5, 0.5, 0.5, 0.5};
    double t = 2 * std::numbers::pi / 16;
    auto out = matrix_exp_i(fixture_a(), t).apply(u);
    Complex phase = std::polar(1.0, t);
    for (int k = 0; k < 4; ++k) {
        EXPECT_LT(std::abs(out[k] - phase * u[k]), 1e-10);
    }
}

TEST(matrix_exp_i, unitary) {
    auto u = matrix_exp_i(fixture_a(), 2 * std::numbers::pi);
    EXPECT_LE(frobenius_of_difference(naive_product(u, u.adjoint()), DenseMatrix::identity(4)), 1e-10);
}

TEST(matrix_exp_i, matches_taylor_series) {
    std::mt19937_64 gen(21);
    for (std::size_t n : {2u, 4u, 8u}) {
        auto a = random_hermitian(n, gen);
        EXPECT_LT(max_abs_difference(matrix_exp_i(a, 0.7), taylor_exp_i(a, 0.7)), 1e-10);
    }
    EXPECT_LT(max_abs_difference(matrix_exp_i(fixture_a(), 0.39), taylor_exp_i(fixture_a(), 0.39)), 1e-10);
}

TEST(matrix_exp_i, group_property) {
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> t(-3, 3);
    for (std::size_t n = 1; n <= 8; ++n) {
        auto a = random_hermitian(n, gen);
        double s = t(gen);
        double r = t(gen);
        auto lhs = naive_product(matrix_exp_i(a, s), matrix_exp_i(a, r));
        EXPECT_LT(max_abs_difference(lhs, matrix_exp_i(a, s + r)), 1e-9);
        auto u = matrix_exp_i(a, s);
        EXPECT_LE(frobenius_of_difference(naive_product(u, u.adjoint()), DenseMatrix::identity(n)), 1e-10);
    }
}

TEST(condition_number, examples) {
    EXPECT_NEAR(condition_number(fixture_a()), 8.0, 1e-10);
    EXPECT_NEAR(condition_number(DenseMatrix::identity(3)), 1.0, 1e-14);
    const double singular[] = {1, 0};
    EXPECT_QLR_ERROR(condition_number(DenseMatrix::diagonal(singular)), ErrorCode::kConditioning);
}

TEST(hermitian_embed, block_placement) {
    auto e = hermitian_embed(DenseMatrix::from_rows({{0, 1}, {0, 0}}));
    auto expected = DenseMatrix::from_rows({{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});
    EXPECT_EQ(e, expected);
    EXPECT_TRUE(is_hermitian(e, 0));
}

TEST(hermitian_embed, round_trip) {
    std::mt19937_64 gen(4);
    std::normal_distribution<double> g;
    DenseMatrix a(3);
    for (auto &z : a.entries()) {
        z = Complex(g(gen), g(gen));
    }
    auto e = hermitian_embed(a);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_EQ(e(3 + i, j), a(i, j));
            EXPECT_EQ(e(i, 3 + j), std::conj(a(j, i)));
        }
    }
}

TEST(hermitian_embed, spectrum_is_plus_minus_singular_values) {
    // Real 2x2: σ² are the roots of x² - ‖A‖_F² x + det(A)² = 0.
    const double p = 3, q = -1, r = 2, s = 0.5;
    auto a = DenseMatrix::from_rows({{p, q}, {r, s}});
    double f2 = p * p + q * q + r * r + s * s;
    double det = p * s - q * r;
    double disc = std::sqrt(f2 * f2 - 4 * det * det);
    double s_hi = std::sqrt((f2 + disc) / 2);
    double s_lo = std::sqrt((f2 - disc) / 2);
    auto ev = eigh(hermitian_embed(a)).eigenvalues;
    EXPECT_NEAR(ev[0], -s_hi, 1e-10);
    EXPECT_NEAR(ev[1], -s_lo, 1e-10);
    EXPECT_NEAR(ev[2], s_lo, 1e-10);
    EXPECT_NEAR(ev[3], s_hi, 1e-10);
}

TEST(hermitian_embed, symmetric_spectrum_random) {
    std::mt19937_64 gen(9);
    std::normal_distribution<double> g;
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        DenseMatrix a(n);
        for (auto &z : a.entries()) {
            z = Complex(g(gen), g(gen));
        }
        auto ev = eigh(hermitian_embed(a)).eigenvalues;
        for (std::size_t k = 0; k < ev.size(); ++k) {
            EXPECT_NEAR(ev[k], -ev[ev.size() - 1 - k], 1e-10);
        }
    }
}

TEST(pauli_decompose_2q, fixture_terms) {
    auto d = pauli_decompose_2q(fixture_a());
    const Pauli ps[] = {Pauli::kI, Pauli::kX, Pauli::kY, Pauli::kZ};
    for (auto p0 : ps) {
        for (auto p1 : ps) {
            double expected = 0;
            if (p0 == Pauli::kI && p1 == Pauli::kI) {
                expected = 15.0 / 4;
            } else if (p0 == Pauli::kZ && p1 == Pauli::kX) {
                expected = 9.0 / 4;
            } else if (p0 == Pauli::kX && p1 == Pauli::kZ) {
                expected = 5.0 / 4;
            } else if (p0 == Pauli::kY && p1 == Pauli::kY) {
                expected = 3.0 / 4;
            }
            EXPECT_NEAR(d(p0, p1), expected, 1e-12) << pauli_name(p0) << pauli_name(p1);
        }
    }
}

TEST(pauli_decompose_2q, identity) {
    auto d = pauli_decompose_2q(DenseMatrix::identity(4));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            EXPECT_NEAR(d.coefficients[i][j], i == 0 && j == 0 ? 1.0 : 0.0, 1e-15);
        }
    }
}

TEST(pauli_decompose_2q, reconstruction_and_isometry) {
    std::mt19937_64 gen(13);
    for (int rep = 0; rep < 20; ++rep) {
        auto h = random_hermitian(4, gen);
        auto d = pauli_decompose_2q(h);
        // Independent reconstruction from explicit Kronecker products.
        DenseMatrix sum(4);
        double squares = 0;
        const Pauli ps[] = {Pauli::kI, Pauli::kX, Pauli::kY, Pauli::kZ};
        for (auto p0 : ps) {
            for (auto p1 : ps) {
                auto a = pauli_matrix(p0);
                auto b = pauli_matrix(p1);
                for (std::size_t r = 0; r < 4; ++r) {
                    for (std::size_t c = 0; c < 4; ++c) {
                        sum(r, c) += d(p0, p1) * a(r / 2, c / 2) * b(r % 2, c % 2);
                    }
                }
                squares += d(p0, p1) * d(p0, p1);
            }
        }
        EXPECT_LT(max_abs_difference(sum, h), 1e-10);
        EXPECT_LT(max_abs_difference(pauli_reconstruct(d), h), 1e-10);
        EXPECT_NEAR(4 * squares, h.frobenius_norm() * h.frobenius_norm(), 1e-9);
    }
}

TEST(pauli_decompose_2q, rejects_bad_input) {
    EXPECT_QLR_ERROR(pauli_decompose_2q(DenseMatrix::identity(2)), ErrorCode::kDimension);
    auto m = DenseMatrix::identity(4);
    m(0, 1) = 1;
    EXPECT_QLR_ERROR(pauli_decompose_2q(m), ErrorCode::kNotHermitian);
}

TEST(hilbert_schmidt_distance, examples) {
    auto i2 = DenseMatrix::identity(2);
    EXPECT_EQ(hilbert_schmidt_distance(i2, i2), 0.0);
    const double zd[] = {1, -1};
    EXPECT_NEAR(hilbert_schmidt_distance(i2, DenseMatrix::diagonal(zd)), 2.0, 1e-15);
    EXPECT_NEAR(hilbert_schmidt_distance(i2, i2 * Complex(0, 1)), 2.0, 1e-15);
    EXPECT_QLR_ERROR(hilbert_schmidt_distance(i2, DenseMatrix::identity(4)), ErrorCode::kDimension);
}

TEST(matrix_json, round_trip) {
    std::mt19937_64 gen(1);
    auto a = random_hermitian(4, gen);
    EXPECT_EQ(matrix_from_json(nlohmann::json::parse(matrix_to_json(a).dump())), a);
    auto j = nlohmann::json::parse(R"({"dim": 2, "entries": [1, 0, [0, 1], 2]})");
    auto m = matrix_from_json(j);
    EXPECT_EQ(m(1, 0), Complex(0, 1));
    EXPECT_QLR_ERROR(matrix_from_json(nlohmann::json::parse(R"({"dim": 2, "entries": [1]})")), ErrorCode::kDimension);
    EXPECT_QLR_ERROR(matrix_from_json(nlohmann::json::parse(R"({"entries": [1]})")), ErrorCode::kParse);
}
