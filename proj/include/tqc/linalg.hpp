// Copyright 2026 The tqc Authors
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

#pragma once

// Dense complex linear algebra for the small matrices used throughout the
// library (two-qubit states, Toeplitz generators, Lanczos test problems).
// Storage is row-major; nothing here is tuned for dimensions beyond ~64.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tqc/error.hpp"

namespace tqc {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr int kJacobiSweepBudget = 100;

class Matrix {
   public:
    Matrix() = default;

    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : Matrix(rows.size()) {
        std::size_t i = 0;
        for (const auto &row : rows) {
            if (row.size() != dim_) {
                throw Error(ErrorCode::BadDimension, "matrix literal is not square");
            }
            std::size_t j = 0;
            for (const auto &v : row) {
                (*this)(i, j++) = v;
            }
            ++i;
        }
    }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static Matrix diagonal(std::span<const double> values) {
        Matrix m(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            m(i, i) = values[i];
        }
        return m;
    }

    static Matrix outer(std::span<const Complex> u, std::span<const Complex> v) {
        if (u.size() != v.size()) {
            throw Error(ErrorCode::DimensionMismatch, "outer product of vectors with different lengths");
        }
        Matrix m(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            for (std::size_t j = 0; j < v.size(); ++j) {
                m(i, j) = u[i] * std::conj(v[j]);
            }
        }
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    Complex &operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    std::span<const Complex> data() const noexcept { return data_; }

    CVector column(std::size_t j) const {
        CVector c(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            c[i] = (*this)(i, j);
        }
        return c;
    }

    Matrix adjoint() const {
        Matrix r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                r(j, i) = std::conj((*this)(i, j));
            }
        }
        return r;
    }

    Matrix conjugate() const {
        Matrix r(*this);
        for (auto &v : r.data_) {
            v = std::conj(v);
        }
        return r;
    }

    Matrix transpose() const {
        Matrix r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                r(j, i) = (*this)(i, j);
            }
        }
        return r;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    Matrix &operator+=(const Matrix &o) {
        require_same_dim(o);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += o.data_[k];
        }
        return *this;
    }

    Matrix &operator-=(const Matrix &o) {
        require_same_dim(o);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] -= o.data_[k];
        }
        return *this;
    }

    Matrix &operator*=(Complex s) {
        for (auto &v : data_) {
            v *= s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        a.require_same_dim(b);
        const std::size_t n = a.dim_;
        Matrix r(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    r(i, j) += aik * b(k, j);
                }
            }
        }
        return r;
    }

    friend CVector operator*(const Matrix &a, std::span<const Complex> v) {
        if (v.size() != a.dim_) {
            throw Error(ErrorCode::DimensionMismatch, "matrix-vector product with mismatched length");
        }
        CVector r(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) {
            Complex s = 0.0;
            for (std::size_t j = 0; j < a.dim_; ++j) {
                s += a(i, j) * v[j];
            }
            r[i] = s;
        }
        return r;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) = default;

   private:
    void require_same_dim(const Matrix &o) const {
        if (o.dim_ != dim_) {
            throw Error(ErrorCode::DimensionMismatch,
                        "matrix dimensions differ: " + std::to_string(dim_) + " vs " + std::to_string(o.dim_));
        }
    }

    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

inline double max_abs(const Matrix &m) {
    double r = 0.0;
    for (const auto &v : m.data()) {
        r = std::max(r, std::abs(v));
    }
    return r;
}

inline double max_abs_diff(const Matrix &a, const Matrix &b) { return max_abs(a - b); }

/// max |A - A^dagger| over all entries.
inline double hermiticity_defect(const Matrix &a) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            r = std::max(r, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return r;
}

inline Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        s += std::conj(u[i]) * v[i];
    }
    return s;
}

inline double norm2(std::span<const Complex> v) { return std::sqrt(std::real(inner(v, v))); }

inline Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    Matrix r(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    r(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

/// Subsystem of a 2x2 factorized space. A is the first tensor factor, so
/// basis index = 2*a + b.
enum class Subsystem { A, B };

inline Matrix partial_trace(const Matrix &rho, Subsystem keep) {
    if (rho.dim() != 4) {
        throw Error(ErrorCode::BadDimension, "partial trace needs a 4x4 two-qubit matrix, got dim " +
                                                 std::to_string(rho.dim()));
    }
    Matrix r(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                if (keep == Subsystem::A) {
                    r(i, j) += rho(2 * i + k, 2 * j + k);
                } else {
                    r(i, j) += rho(2 * k + i, 2 * k + j);
                }
            }
        }
    }
    return r;
}

struct HermitianEigen {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k pairs with values[k]
    int sweeps = 0;
};

/// Cyclic complex Jacobi diagonalization. The input must be Hermitian to
/// within kHermitianTolerance (absolute, max entry); it is symmetrized
/// before rotating.
inline HermitianEigen hermitian_eig(const Matrix &input) {
    const std::size_t n = input.dim();
    if (n == 0) {
        throw Error(ErrorCode::BadDimension, "eigendecomposition of an empty matrix");
    }
    const double defect = hermiticity_defect(input);
    if (!(defect <= kHermitianTolerance)) {
        throw Error(ErrorCode::NotHermitian, "max |A - A^dagger| = " + std::to_string(defect));
    }

    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = std::real(input(i, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (input(i, j) + std::conj(input(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    Matrix v = Matrix::identity(n);

    auto off_norm2 = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                s += std::norm(a(p, q));
            }
        }
        return s;
    };
    double total2 = 0.0;
    for (const auto &x : a.data()) {
        total2 += std::norm(x);
    }

    int sweep = 0;
    for (;; ++sweep) {
        const double off = off_norm2();
        if (off == 0.0 || off <= 1e-32 * total2) {
            break;
        }
        if (sweep >= kJacobiSweepBudget) {
            throw Error(ErrorCode::NoConvergence,
                        "Jacobi exceeded " + std::to_string(kJacobiSweepBudget) + " sweeps");
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) {
                    continue;
                }
                // Rotation G = D R D^dagger with D = diag(1, e^{-i phase}) turns
                // the (p, q) block into a real symmetric one.
                const Complex phase = a(p, q) / r;
                const double app = std::real(a(p, p));
                const double aqq = std::real(a(q, q));
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex gpq = s * phase;              // G(p, q)
                const Complex gqp = -s * std::conj(phase);  // G(q, p)

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp + gqp * akq;
                    a(k, q) = gpq * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + c * aqk;
                }
                a(p, p) = app - t * r;
                a(q, q) = aqq + t * r;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp + gqp * vkq;
                    v(k, q) = gpq * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return std::real(a(x, x)) < std::real(a(y, y)); });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n);
    out.sweeps = sweep;
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = std::real(a(order[k], order[k]));
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

inline std::vector<double> eigenvalues(const Matrix &a) { return hermitian_eig(a).values; }

/// V diag(f(lambda)) V^dagger for a precomputed decomposition.
template <class F>
Matrix matrix_function(const HermitianEigen &eig, F &&f) {
    const std::size_t n = eig.values.size();
    std::vector<Complex> fv(n);
    for (std::size_t k = 0; k < n; ++k) {
        fv[k] = Complex(f(eig.values[k]));
    }
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                s += eig.vectors(i, k) * fv[k] * std::conj(eig.vectors(j, k));
            }
            r(i, j) = s;
        }
    }
    return r;
}

template <class F>
Matrix matrix_function(const Matrix &a, F &&f) {
    return matrix_function(hermitian_eig(a), std::forward<F>(f));
}

/// Eigenvalues of a general (non-Hermitian) small matrix: characteristic
/// polynomial by Faddeev-LeVerrier, roots by Durand-Kerner. Only meant for
/// dims of a handful; accuracy degrades for clustered roots.
inline std::vector<Complex> general_eigenvalues(const Matrix &a) {
    const std::size_t n = a.dim();
    if (n == 0) {
        throw Error(ErrorCode::BadDimension, "eigenvalues of an empty matrix");
    }
    // p(x) = x^n + c[n-1] x^(n-1) + ... + c[0]
    std::vector<Complex> c(n + 1);
    c[n] = 1.0;
    Matrix m(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) {
            next(i, i) += c[n - k + 1];
        }
        m = std::move(next);
        c[n - k] = -(a * m).trace() / static_cast<double>(k);
    }

    auto poly = [&](Complex x) {
        Complex r = 1.0;
        for (std::size_t k = n; k-- > 0;) {
            r = r * x + c[k];
        }
        return r;
    };
    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        radius = std::max(radius, std::abs(c[k]));
    }
    radius = 1.0 + radius;  // Cauchy bound on root magnitudes
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        z[k] = radius * std::pow(Complex(0.4, 0.9), static_cast<double>(k));
    }
    for (int iter = 0; iter < 2000; ++iter) {
        double change = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) {
                    denom *= z[k] - z[j];
                }
            }
            if (denom == Complex{}) {
                denom = 1e-300;
            }
            const Complex delta = poly(z[k]) / denom;
            z[k] -= delta;
            change = std::max(change, std::abs(delta));
        }
        if (change <= 1e-15 * radius) {
            break;
        }
    }
    return z;
}

inline Matrix pauli_x() { return Matrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline Matrix pauli_y() { return Matrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
inline Matrix pauli_z() { return Matrix{{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace tqc
