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

#include <cmath>
#include <string>
#include <utility>

#include "tqc/error.hpp"
#include "tqc/linalg.hpp"
#include "tqc/states.hpp"
#include "tqc/toeplitz.hpp"

namespace tqc {

// hbar = 1 throughout; t is dimensionless.

struct EvolutionSpec {
    ToeplitzParams hamiltonian;
    double t = 0.0;
};

/// exp(-i H t) for a fixed Hermitian H, diagonalized once.
///
/// A scalar shift c (the common diagonal entry when there is one, else
/// tr(H)/dim) is split off before diagonalizing. It only contributes the
/// global phase exp(-i c t), which cancels in U rho U^dagger, so conjugation
/// never touches it. For a Toeplitz H the remaining generator is bitwise
/// independent of the diagonal entry.
class Propagator {
   public:
    explicit Propagator(const Matrix &hamiltonian) : shift_(scalar_part(hamiltonian)) {
        Matrix traceless = hamiltonian;
        for (std::size_t i = 0; i < traceless.dim(); ++i) {
            traceless(i, i) -= shift_;
        }
        eig_ = hermitian_eig(traceless);
    }

    explicit Propagator(const ToeplitzParams &p) : Propagator(build_hamiltonian(p)) {}

    std::size_t dim() const noexcept { return eig_.values.size(); }
    double scalar_shift() const noexcept { return shift_; }
    const HermitianEigen &traceless_eigen() const noexcept { return eig_; }

    /// Full U(t) including the global phase.
    Matrix unitary(double t) const {
        return matrix_function(eig_, [&](double lambda) { return std::polar(1.0, -(lambda + shift_) * t); });
    }

    /// U(t) with the global phase exp(-i c t) dropped.
    Matrix traceless_unitary(double t) const {
        return matrix_function(eig_, [&](double lambda) { return std::polar(1.0, -lambda * t); });
    }

    DensityMatrix evolve(const DensityMatrix &rho0, double t) const {
        if (rho0.dim() != dim()) {
            throw Error(ErrorCode::DimensionMismatch, "state dim " + std::to_string(rho0.dim()) +
                                                          " vs Hamiltonian dim " + std::to_string(dim()));
        }
        const Matrix u = traceless_unitary(t);
        return DensityMatrix(u * rho0.matrix() * u.adjoint(), rho0.label());
    }

   private:
    static double scalar_part(const Matrix &h) {
        if (h.empty()) {
            throw Error(ErrorCode::BadDimension, "empty Hamiltonian");
        }
        const Complex first = h(0, 0);
        bool constant = true;
        for (std::size_t i = 1; i < h.dim(); ++i) {
            constant = constant && h(i, i) == first;
        }
        return constant ? std::real(first) : std::real(h.trace()) / static_cast<double>(h.dim());
    }

    double shift_;
    HermitianEigen eig_;
};

inline Matrix propagator(const EvolutionSpec &spec) { return Propagator(spec.hamiltonian).unitary(spec.t); }

inline DensityMatrix evolve(const DensityMatrix &rho0, const EvolutionSpec &spec) {
    if (!std::isfinite(spec.t)) {
        throw Error(ErrorCode::InvalidParams, "evolution time must be finite");
    }
    return Propagator(spec.hamiltonian).evolve(rho0, spec.t);
}

/// U rho0 U^dagger for an explicit unitary.
inline DensityMatrix evolve(const DensityMatrix &rho0, const Matrix &u) {
    if (rho0.dim() != u.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state dim " + std::to_string(rho0.dim()) +
                                                      " vs propagator dim " + std::to_string(u.dim()));
    }
    return DensityMatrix(u * rho0.matrix() * u.adjoint(), rho0.label());
}

/// ||rho(t; a, b, n) - rho(t; a, b^n, 1)||_max. Zero up to roundoff because
/// the dynamics only see the product b^n t.
inline double scaled_time_equivalence(const DensityMatrix &rho0, double a, double b, double n, double t) {
    const ToeplitzParams original{a, b, n, rho0.dim()};
    const ToeplitzParams rescaled{a, std::pow(b, n), 1.0, rho0.dim()};
    const auto lhs = evolve(rho0, EvolutionSpec{original, t});
    const auto rhs = evolve(rho0, EvolutionSpec{rescaled, t});
    return max_abs_diff(lhs.matrix(), rhs.matrix());
}

}  // namespace tqc
