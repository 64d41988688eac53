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

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "tqc/error.hpp"
#include "tqc/linalg.hpp"

namespace tqc {

inline constexpr double kDensityTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

/// A two-qubit (or general) state operator plus a free-text provenance label.
/// Construction only checks shape; use validate_density for the physics.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    explicit DensityMatrix(Matrix matrix, std::string label = {})
        : matrix_(std::move(matrix)), label_(std::move(label)) {
        if (matrix_.empty()) {
            throw Error(ErrorCode::BadDimension, "density matrix must have dim >= 1");
        }
    }

    const Matrix &matrix() const noexcept { return matrix_; }
    const std::string &label() const noexcept { return label_; }
    std::size_t dim() const noexcept { return matrix_.dim(); }
    Complex operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

   private:
    Matrix matrix_;
    std::string label_;
};

/// Mixing parameter gamma in [0, 1]. Rejected rather than clamped when out
/// of range.
class StateParam {
   public:
    explicit StateParam(double gamma) : gamma_(gamma) {
        if (!(gamma >= 0.0 && gamma <= 1.0)) {
            throw Error(ErrorCode::OutOfRange, "gamma must lie in [0, 1], got " + std::to_string(gamma));
        }
    }

    double gamma() const noexcept { return gamma_; }

    /// g(gamma): 1/3 below gamma = 2/3, gamma/2 from there on.
    double delta() const noexcept { return gamma_ < 2.0 / 3.0 ? 1.0 / 3.0 : gamma_ / 2.0; }

   private:
    double gamma_;
};

/// gamma |psi-><psi-| + (1 - gamma) I/4 with |psi-> = (|01> - |10>)/sqrt(2).
inline DensityMatrix werner_state(StateParam p) {
    const double g = p.gamma();
    Matrix m(4);
    m(0, 0) = (1.0 - g) / 4.0;
    m(1, 1) = (1.0 + g) / 4.0;
    m(2, 2) = (1.0 + g) / 4.0;
    m(3, 3) = (1.0 - g) / 4.0;
    m(1, 2) = -g / 2.0;
    m(2, 1) = -g / 2.0;
    return DensityMatrix(std::move(m), "werner(gamma=" + std::to_string(g) + ")");
}

inline DensityMatrix mems_state(StateParam p) {
    const double g = p.gamma();
    const double d = p.delta();
    Matrix m(4);
    m(0, 0) = d;
    m(1, 1) = 1.0 - 2.0 * d;
    m(3, 3) = d;
    m(0, 3) = g / 2.0;
    m(3, 0) = g / 2.0;
    return DensityMatrix(std::move(m), "mems(gamma=" + std::to_string(g) + ")");
}

struct DensityDiagnostics {
    double hermiticity_defect = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;

    bool ok(double tol = kDensityTolerance, double psd_tol = kPsdTolerance) const {
        return hermiticity_defect <= tol && trace_defect <= tol && min_eigenvalue >= -psd_tol;
    }
};

inline DensityDiagnostics validate_density(const DensityMatrix &rho) {
    DensityDiagnostics d;
    const Matrix &m = rho.matrix();
    d.hermiticity_defect = hermiticity_defect(m);
    d.trace_defect = std::abs(m.trace() - Complex(1.0));
    // The spectrum of the Hermitian part; a large defect is already reported above.
    Matrix sym = 0.5 * (m + m.adjoint());
    d.min_eigenvalue = hermitian_eig(sym).values.front();
    return d;
}

inline DensityMatrix partial_trace(const DensityMatrix &rho, Subsystem keep) {
    return DensityMatrix(partial_trace(rho.matrix(), keep),
                         rho.label() + (keep == Subsystem::A ? " |A" : " |B"));
}

inline DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix(kron(a.matrix(), b.matrix()), a.label() + " x " + b.label());
}

}  // namespace tqc
