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

#include "qlr/numerics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qlr/error.h"

namespace qlr {

const char *error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return "invalid argument";
        case ErrorCode::kParse:
            return "parse error";
        case ErrorCode::kConditioning:
            return "conditioning error";
        case ErrorCode::kPostselection:
            return "postselection failure";
        case ErrorCode::kDimension:
            return "dimension mismatch";
        case ErrorCode::kNotUnitary:
            return "not unitary";
        case ErrorCode::kNotHermitian:
            return "not hermitian";
        case ErrorCode::kIo:
            return "i/o error";
        case ErrorCode::kInternal:
            return "internal error";
    }
    return "unknown error";
}

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw Error(ErrorCode::kDimension, "matrix dimension must be positive");
    }
}

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) {
        throw Error(ErrorCode::kDimension, "matrix dimension must be positive");
    }
    if (entries_.size() != dim * dim) {
        throw Error(
            ErrorCode::kDimension,
            "matrix of dimension " + std::to_string(dim) + " needs " + std::to_string(dim * dim) + " entries, got " +
                std::to_string(entries_.size()));
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::kInvalidArgument, "matrix entries must be finite");
        }
    }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
    DenseMatrix m(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        m(k, k) = values[k];
    }
    return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Complex>> &rows) {
    std::vector<Complex> entries;
    for (const auto &row : rows) {
        if (row.size() != rows.size()) {
            throw Error(ErrorCode::kDimension, "matrix rows must form a square");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return DenseMatrix(rows.size(), std::move(entries));
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex DenseMatrix::trace() const {
    Complex total = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
        total += (*this)(k, k);
    }
    return total;
}

double DenseMatrix::frobenius_norm() const {
    double total = 0.0;
    for (const auto &z : entries_) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

std::vector<Complex> DenseMatrix::column(std::size_t col) const {
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        out[r] = (*this)(r, col);
    }
    return out;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> vec) const {
    if (vec.size() != dim_) {
        throw Error(ErrorCode::kDimension, "vector length does not match matrix dimension");
    }
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < dim_; ++c) {
            acc += (*this)(r, c) * vec[c];
        }
        out[r] = acc;
    }
    return out;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &other) {
    if (other.dim_ != dim_) {
        throw Error(ErrorCode::kDimension, "matrix dimensions differ");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator-=(const DenseMatrix &other) {
    if (other.dim_ != dim_) {
        throw Error(ErrorCode::kDimension, "matrix dimensions differ");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw Error(ErrorCode::kDimension, "matrix dimensions differ");
    }
    std::size_t n = a.dim_;
    DenseMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            Complex lhs = a(r, k);
            if (lhs == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += lhs * b(k, c);
            }
        }
    }
    return out;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    std::size_t na = a.dim();
    std::size_t nb = b.dim();
    DenseMatrix out(na * nb);
    for (std::size_t ra = 0; ra < na; ++ra) {
        for (std::size_t ca = 0; ca < na; ++ca) {
            for (std::size_t rb = 0; rb < nb; ++rb) {
                for (std::size_t cb = 0; cb < nb; ++cb) {
                    out(ra * nb + rb, ca * nb + cb) = a(ra, ca) * b(rb, cb);
                }
            }
        }
    }
    return out;
}

double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::kDimension, "matrix dimensions differ");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

bool is_hermitian(const DenseMatrix &m, double tol) {
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = r; c < m.dim(); ++c) {
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_unitary(const DenseMatrix &m, double tol) {
    return max_abs_difference(m * m.adjoint(), DenseMatrix::identity(m.dim())) <= tol;
}

namespace {

void require_hermitian(const DenseMatrix &m, const char *what) {
    if (!is_hermitian(m, kDefaultTolerance)) {
        throw Error(ErrorCode::kNotHermitian, std::string(what) + ": input matrix is not Hermitian");
    }
}

double off_diagonal_norm(const DenseMatrix &a) {
    double total = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (r != c) {
                total += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(total);
}

}  // namespace

HermitianEigenSystem eigh(const DenseMatrix &m) {
    require_hermitian(m, "eigh");
    const std::size_t n = m.dim();
    DenseMatrix a = m;
    DenseMatrix v = DenseMatrix::identity(n);

    const double scale = m.frobenius_norm();
    const double threshold = 1e-14 * scale;
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps && scale > 0 && off_diagonal_norm(a) >= threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                Complex apq = a(p, q);
                double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                // Phase e^{-iφ} on column q makes the pivot real, then a real
                // Jacobi rotation annihilates it. Combined rotation R acts on
                // columns (p, q).
                Complex phase = apq / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double theta = (aqq - app) / (2.0 * mag);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                Complex rpp = c;
                Complex rpq = s;
                Complex rqp = -s * std::conj(phase);
                Complex rqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * rpp + akq * rqp;
                    a(k, q) = akp * rpq + akq * rqq;
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * rpp + vkq * rqp;
                    v(k, q) = vkp * rpq + vkq * rqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = std::conj(rpp) * apk + std::conj(rqp) * aqk;
                    a(q, k) = std::conj(rpq) * apk + std::conj(rqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (scale > 0 && off_diagonal_norm(a) >= threshold) {
        throw Error(ErrorCode::kInternal, "eigh: Jacobi iteration did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    HermitianEigenSystem out{std::vector<double>(n), DenseMatrix(n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t k = 0; k < n; ++k) {
            out.eigenvectors(k, j) = v(k, order[j]);
        }
    }
    return out;
}

DenseMatrix matrix_exp_i(const DenseMatrix &a, double t) {
    require_hermitian(a, "matrix_exp_i");
    auto sys = eigh(a);
    const std::size_t n = a.dim();
    DenseMatrix out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Complex phase = std::polar(1.0, sys.eigenvalues[j] * t);
        for (std::size_t r = 0; r < n; ++r) {
            Complex left = phase * sys.eigenvectors(r, j);
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += left * std::conj(sys.eigenvectors(c, j));
            }
        }
    }
    return out;
}

double condition_number(const DenseMatrix &a) {
    auto sys = eigh(a);
    double largest = 0.0;
    double smallest = std::numeric_limits<double>::infinity();
    for (double lambda : sys.eigenvalues) {
        largest = std::max(largest, std::abs(lambda));
        smallest = std::min(smallest, std::abs(lambda));
    }
    if (largest == 0.0 || smallest < 1e-12 * largest) {
        throw Error(ErrorCode::kConditioning, "undefined condition number: matrix is singular");
    }
    return largest / smallest;
}

DenseMatrix hermitian_embed(const DenseMatrix &a) {
    const std::size_t n = a.dim();
    DenseMatrix out(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(n + r, c) = a(r, c);
            out(c, n + r) = std::conj(a(r, c));
        }
    }
    return out;
}

DenseMatrix pauli_matrix(Pauli p) {
    const Complex i{0.0, 1.0};
    switch (p) {
        case Pauli::kI:
            return DenseMatrix::identity(2);
        case Pauli::kX:
            return DenseMatrix(2, {0.0, 1.0, 1.0, 0.0});
        case Pauli::kY:
            return DenseMatrix(2, {0.0, -i, i, 0.0});
        case Pauli::kZ:
            return DenseMatrix(2, {1.0, 0.0, 0.0, -1.0});
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown Pauli");
}

char pauli_name(Pauli p) {
    return "IXYZ"[static_cast<int>(p)];
}

PauliDecomposition2Q pauli_decompose_2q(const DenseMatrix &h) {
    if (h.dim() != 4) {
        throw Error(ErrorCode::kDimension, "pauli_decompose_2q needs a 4x4 matrix, got dimension " + std::to_string(h.dim()));
    }
    PauliDecomposition2Q out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            auto basis = kron(pauli_matrix(static_cast<Pauli>(i)), pauli_matrix(static_cast<Pauli>(j)));
            Complex coeff = (basis * h).trace() / 4.0;
            if (std::abs(coeff.imag()) > kDefaultTolerance) {
                throw Error(ErrorCode::kNotHermitian, "pauli_decompose_2q: complex coefficient, input is not Hermitian");
            }
            out.coefficients[i][j] = coeff.real();
        }
    }
    return out;
}

DenseMatrix pauli_reconstruct(const PauliDecomposition2Q &d) {
    DenseMatrix out(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (d.coefficients[i][j] != 0.0) {
                out += kron(pauli_matrix(static_cast<Pauli>(i)), pauli_matrix(static_cast<Pauli>(j))) *
                       Complex(d.coefficients[i][j]);
            }
        }
    }
    return out;
}

double hilbert_schmidt_distance(const DenseMatrix &u, const DenseMatrix &v) {
    if (u.dim() != v.dim()) {
        throw Error(ErrorCode::kDimension, "hilbert_schmidt_distance: dimensions differ");
    }
    return (u - v).frobenius_norm();
}

nlohmann::json matrix_to_json(const DenseMatrix &m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &z : m.entries()) {
        entries.push_back({z.real(), z.imag()});
    }
    return {{"dim", m.dim()}, {"entries", std::move(entries)}};
}

DenseMatrix matrix_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw Error(ErrorCode::kParse, "matrix JSON needs \"dim\" and \"entries\"");
    }
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
        throw Error(ErrorCode::kParse, "matrix JSON \"dim\" must be a positive integer");
    }
    auto dim = j["dim"].get<std::size_t>();
    const auto &raw = j["entries"];
    if (!raw.is_array()) {
        throw Error(ErrorCode::kParse, "matrix JSON \"entries\" must be an array");
    }
    if (raw.size() != dim * dim) {
        throw Error(
            ErrorCode::kDimension,
            "matrix JSON declares dim " + std::to_string(dim) + " but has " + std::to_string(raw.size()) + " entries");
    }
    std::vector<Complex> entries;
    entries.reserve(raw.size());
    for (const auto &e : raw) {
        if (e.is_number()) {
            entries.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            entries.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw Error(ErrorCode::kParse, "matrix JSON entries must be [re, im] pairs");
        }
    }
    return DenseMatrix(dim, std::move(entries));
}

double vector_norm(std::span<const Complex> v) {
    double total = 0.0;
    for (const auto &z : v) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

double vector_norm(std::span<const double> v) {
    double total = 0.0;
    for (double x : v) {
        total += x * x;
    }
    return std::sqrt(total);
}

}  // namespace qlr
