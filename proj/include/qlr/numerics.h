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

#ifndef QLR_NUMERICS_H_
#define QLR_NUMERICS_H_

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace qlr {

using Complex = std::complex<double>;

/// Square complex matrix stored row-major.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    /// Zero matrix of the given dimension.
    explicit DenseMatrix(std::size_t dim);
    DenseMatrix(std::size_t dim, std::vector<Complex> entries);

    static DenseMatrix identity(std::size_t dim);
    static DenseMatrix diagonal(std::span<const double> values);
    static DenseMatrix from_rows(const std::vector<std::vector<Complex>> &rows);

    std::size_t dim() const noexcept {
        return dim_;
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }
    std::span<Complex> entries() noexcept {
        return entries_;
    }

    DenseMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    std::vector<Complex> column(std::size_t col) const;
    std::vector<Complex> apply(std::span<const Complex> vec) const;

    DenseMatrix &operator+=(const DenseMatrix &other);
    DenseMatrix &operator-=(const DenseMatrix &other);
    DenseMatrix &operator*=(Complex scale);

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b) {
        return a += b;
    }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b) {
        return a -= b;
    }
    friend DenseMatrix operator*(DenseMatrix a, Complex scale) {
        return a *= scale;
    }
    friend DenseMatrix operator*(Complex scale, DenseMatrix a) {
        return a *= scale;
    }
    friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);
    bool operator==(const DenseMatrix &other) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// Largest absolute entry of `a - b`.
double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b);

inline constexpr double kDefaultTolerance = 1e-10;

bool is_hermitian(const DenseMatrix &m, double tol = kDefaultTolerance);
bool is_unitary(const DenseMatrix &m, double tol = kDefaultTolerance);

struct HermitianEigenSystem {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Column j is the eigenvector of eigenvalues[j].
    DenseMatrix eigenvectors;
};

/// Cyclic complex Jacobi eigendecomposition. Throws kNotHermitian when the
/// input is not Hermitian to 1e-10.
HermitianEigenSystem eigh(const DenseMatrix &m);

/// exp(i*A*t) for Hermitian A, computed from the spectral decomposition.
DenseMatrix matrix_exp_i(const DenseMatrix &a, double t);

/// max|λ| / min|λ| of a Hermitian matrix. Throws kConditioning when the
/// smallest magnitude is below 1e-12 of the largest.
double condition_number(const DenseMatrix &a);

/// [[0, A†], [A, 0]].
DenseMatrix hermitian_embed(const DenseMatrix &a);

enum class Pauli { kI = 0, kX = 1, kY = 2, kZ = 3 };

DenseMatrix pauli_matrix(Pauli p);
char pauli_name(Pauli p);

/// Coefficients of H = Σ a[i][j] σ_i ⊗ σ_j, indexed by (I, X, Y, Z).
struct PauliDecomposition2Q {
    std::array<std::array<double, 4>, 4> coefficients{};

    double operator()(Pauli first, Pauli second) const {
        return coefficients[static_cast<int>(first)][static_cast<int>(second)];
    }
};

/// a_ij = Tr[(σ_i⊗σ_j) H] / 4. Throws kDimension unless H is 4x4 and
/// kNotHermitian if any coefficient has an imaginary part above 1e-10.
PauliDecomposition2Q pauli_decompose_2q(const DenseMatrix &h);
DenseMatrix pauli_reconstruct(const PauliDecomposition2Q &d);

/// Frobenius norm of U - V.
double hilbert_schmidt_distance(const DenseMatrix &u, const DenseMatrix &v);

/// {"dim": n, "entries": [[re, im], ...]} with entries row-major.
nlohmann::json matrix_to_json(const DenseMatrix &m);
DenseMatrix matrix_from_json(const nlohmann::json &j);

double vector_norm(std::span<const Complex> v);
double vector_norm(std::span<const double> v);

}  // namespace qlr

#endif  // QLR_NUMERICS_H_
