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

#ifndef QLR_TESTS_TEST_UTIL_H_
#define QLR_TESTS_TEST_UTIL_H_

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "qlr/error.h"
#include "qlr/numerics.h"

namespace qlr::testing {

inline DenseMatrix fixture_a() {
    const double v[16] = {15, 9, 5, -3, 9, 15, 3, -5, 5, 3, 15, -9, -3, -5, -9, 15};
    std::vector<Complex> e;
    for (double x : v) {
        e.emplace_back(x / 4.0, 0.0);
    }
    return DenseMatrix(4, e);
}

/// The four listed eigenvector sign patterns, in listed order.
inline std::vector<std::vector<Complex>> listed_eigenvectors() {
    return {{-1, -1, -1, 1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
}

inline std::string data_path(const std::string &name) {
    return std::string(QLR_DATA_DIR) + "/" + name;
}

inline DenseMatrix random_hermitian(std::size_t n, std::mt19937_64 &gen) {
    std::normal_distribution<double> g;
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = g(gen);
        for (std::size_t j = i + 1; j < n; ++j) {
            Complex z(g(gen), g(gen));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

/// Naive triple loop, independent of DenseMatrix::operator*.
inline DenseMatrix naive_product(const DenseMatrix &a, const DenseMatrix &b) {
    std::size_t n = a.dim();
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0;
            for (std::size_t k = 0; k < n; ++k) {
                s += a(i, k) * b(k, j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

/// Random unitary from Gram-Schmidt on a Gaussian matrix.
inline DenseMatrix random_unitary(std::size_t n, std::mt19937_64 &gen) {
    std::normal_distribution<double> g;
    std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
    for (auto &c : cols) {
        for (auto &z : c) {
            z = Complex(g(gen), g(gen));
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t p = 0; p < k; ++p) {
            Complex d = 0;
            for (std::size_t i = 0; i < n; ++i) {
                d += std::conj(cols[p][i]) * cols[k][i];
            }
            for (std::size_t i = 0; i < n; ++i) {
                cols[k][i] -= d * cols[p][i];
            }
        }
        double norm = 0;
        for (auto z : cols[k]) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        for (auto &z : cols[k]) {
            z /= norm;
        }
    }
    DenseMatrix u(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            u(i, j) = cols[j][i];
        }
    }
    return u;
}

#define EXPECT_QLR_ERROR(stmt, expected_code)                                  \
    do {                                                                       \
        try {                                                                  \
            stmt;                                                              \
            ADD_FAILURE() << "expected qlr::Error from " #stmt;                \
        } catch (const ::qlr::Error &e) {                                      \
            EXPECT_EQ(e.code(), expected_code) << e.what();                    \
        }                                                                      \
    } while (0)

}  // namespace qlr::testing

#endif  // QLR_TESTS_TEST_UTIL_H_
