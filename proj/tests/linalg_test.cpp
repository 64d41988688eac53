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

#include "tqc/linalg.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace tqc;

namespace {

double orthonormality_defect(const Matrix &v) { return max_abs_diff(v.adjoint() * v, Matrix::identity(v.dim())); }

Matrix reconstruct(const HermitianEigen &e) {
    return matrix_function(e, [](double l) { return l; });
}

}  // namespace

TEST(hermitian_eig, identity) {
    const auto e = hermitian_eig(Matrix::identity(4));
    for (double v : e.values) {
        EXPECT_DOUBLE_EQ(v, 1.0);
    }
    EXPECT_LT(orthonormality_defect(e.vectors), 1e-14);
}

TEST(hermitian_eig, diagonal_sorted_ascending) {
    const std::vector<double> d{3.0, 1.0, 2.0};
    const auto e = hermitian_eig(Matrix::diagonal(d));
    ASSERT_EQ(e.values.size(), 3u);
    EXPECT_DOUBLE_EQ(e.values[0], 1.0);
    EXPECT_DOUBLE_EQ(e.values[1], 2.0);
    EXPECT_DOUBLE_EQ(e.values[2], 3.0);
}

TEST(hermitian_eig, unit_tridiagonal_matches_characteristic_roots) {
    // Roots from the Sturm-sequence oracle; they equal +-2cos(pi/5), +-2cos(2pi/5).
    const auto roots = oracle::tridiagonal_roots({0, 0, 0, 0}, {1, 1, 1});
    EXPECT_NEAR(roots[0], -1.6180339887498949, 1e-12);
    EXPECT_NEAR(roots[1], -0.6180339887498949, 1e-12);
    EXPECT_NEAR(roots[2], 0.6180339887498949, 1e-12);
    EXPECT_NEAR(roots[3], 1.6180339887498949, 1e-12);

    Matrix s(4);
    for (std::size_t i = 0; i + 1 < 4; ++i) {
        s(i, i + 1) = 1.0;
        s(i + 1, i) = 1.0;
    }
    const auto e = hermitian_eig(s);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(e.values[k], roots[k], 1e-12);
    }
}

TEST(hermitian_eig, rejects_non_hermitian) {
    Matrix a{{1.0, 2.0}, {0.0, 1.0}};
    try {
        hermitian_eig(a);
        FAIL() << "expected NotHermitian";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
}

TEST(hermitian_eig, tolerates_roundoff_asymmetry) {
    Matrix a{{1.0, Complex(0.5, 0.25)}, {Complex(0.5, -0.25 + 5e-13), 2.0}};
    EXPECT_NO_THROW(hermitian_eig(a));
}

TEST(hermitian_eig, random_reconstruction_and_orthonormality) {
    std::mt19937_64 rng(7);
    for (std::size_t dim = 1; dim <= 8; ++dim) {
        for (int rep = 0; rep < 10; ++rep) {
            const Matrix a = oracle::random_hermitian(dim, rng);
            const auto e = hermitian_eig(a);
            EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
            EXPECT_LT(orthonormality_defect(e.vectors), 1e-10);
            EXPECT_LT(max_abs_diff(a, reconstruct(e)), 1e-10 * std::max(1.0, max_abs(a)));
        }
    }
}

TEST(hermitian_eig, agrees_with_qr_oracle) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        const Matrix a = oracle::random_hermitian(5, rng);
        const auto ours = hermitian_eig(a).values;
        const auto ref = oracle::qr_real_eigenvalues(a);
        for (std::size_t k = 0; k < ours.size(); ++k) {
            EXPECT_NEAR(ours[k], ref[k], 1e-9);
        }
    }
}

TEST(matrix_function, zero_time_exponential_is_identity) {
    std::mt19937_64 rng(3);
    const Matrix a = oracle::random_hermitian(4, rng);
    const Matrix u = matrix_function(a, [](double l) { return std::polar(1.0, -l * 0.0); });
    EXPECT_LT(max_abs_diff(u, Matrix::identity(4)), 1e-14);
}

TEST(matrix_function, scalar_matrix_exponential) {
    const double c = 1.7, t = 0.9;
    const Matrix a = Matrix::identity(4) * c;
    const Matrix u = matrix_function(a, [&](double l) { return std::polar(1.0, -l * t); });
    EXPECT_LT(max_abs_diff(u, Matrix::identity(4) * std::polar(1.0, -c * t)), 1e-14);
}

TEST(matrix_function, identity_function_and_unitarity) {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix a = oracle::random_hermitian(6, rng);
        EXPECT_LT(max_abs_diff(matrix_function(a, [](double l) { return l; }), a), 1e-10);
        const Matrix u = matrix_function(a, [](double l) { return std::polar(1.0, -2.3 * l); });
        EXPECT_LT(max_abs_diff(u.adjoint() * u, Matrix::identity(6)), 1e-10);
    }
}

TEST(kron, identities_and_sigma_y) {
    EXPECT_EQ(kron(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4));

    const Matrix yy = kron(pauli_y(), pauli_y());
    Matrix expected(4);
    expected(0, 3) = -1.0;
    expected(1, 2) = 1.0;
    expected(2, 1) = 1.0;
    expected(3, 0) = -1.0;
    EXPECT_LT(max_abs_diff(yy, expected), 1e-15);
}

TEST(kron, mixed_product_property) {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix a = oracle::random_hermitian(2, rng), b = oracle::random_hermitian(2, rng);
        const Matrix c = oracle::random_density(2, rng), d = oracle::random_unitary2(rng);
        EXPECT_LT(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
    }
}

TEST(partial_trace, singlet_reduces_to_maximally_mixed) {
    const CVector psi{0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
    const Matrix rho = Matrix::outer(psi, psi);
    const Matrix half = Matrix::identity(2) * 0.5;
    EXPECT_LT(max_abs_diff(partial_trace(rho, Subsystem::A), half), 1e-15);
    EXPECT_LT(max_abs_diff(partial_trace(rho, Subsystem::B), half), 1e-15);
}

TEST(partial_trace, product_state_and_trace_preservation) {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix ra = oracle::random_density(2, rng), rb = oracle::random_density(2, rng);
        const Matrix rho = kron(ra, rb);
        EXPECT_LT(max_abs_diff(partial_trace(rho, Subsystem::A), ra), 1e-12);
        EXPECT_LT(max_abs_diff(partial_trace(rho, Subsystem::B), rb), 1e-12);

        const Matrix r4 = oracle::random_density(4, rng);
        EXPECT_NEAR(std::real(partial_trace(r4, Subsystem::A).trace()), std::real(r4.trace()), 1e-12);
        EXPECT_NEAR(std::real(partial_trace(r4, Subsystem::B).trace()), 1.0, 1e-12);
    }
}

TEST(partial_trace, rejects_wrong_dimension) {
    try {
        partial_trace(Matrix::identity(3), Subsystem::A);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BadDimension);
    }
}

TEST(general_eigenvalues, matches_known_spectrum) {
    // Upper triangular: eigenvalues on the diagonal.
    Matrix a{{2.0, 1.0, 0.5}, {0.0, -1.0, 3.0}, {0.0, 0.0, 0.25}};
    auto z = general_eigenvalues(a);
    std::vector<double> re;
    for (auto v : z) {
        EXPECT_LT(std::abs(std::imag(v)), 1e-10);
        re.push_back(std::real(v));
    }
    std::sort(re.begin(), re.end());
    EXPECT_NEAR(re[0], -1.0, 1e-10);
    EXPECT_NEAR(re[1], 0.25, 1e-10);
    EXPECT_NEAR(re[2], 2.0, 1e-10);
}
