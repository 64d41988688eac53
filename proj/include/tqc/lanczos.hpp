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
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tqc/error.hpp"
#include "tqc/linalg.hpp"

namespace tqc {

struct LanczosOptions {
    bool reorthogonalize = true;  // full modified Gram-Schmidt against every earlier vector
    double breakdown = 1e-12;
};

struct LanczosOutput {
    std::vector<double> alphas;  // diagonal of T, length k
    std::vector<double> betas;   // off-diagonal of T, length k - 1
    std::vector<CVector> basis;  // k orthonormal columns
    bool terminated_early = false;
    double orthogonality_loss = 0.0;  // max |V^dagger V - I|

    std::size_t steps() const noexcept { return alphas.size(); }
    Matrix tridiagonal() const;

    /// Whether T is constant along its diagonals to within tol.
    bool is_toeplitz(double tol = 1e-8) const {
        auto spread = [](const std::vector<double> &v) {
            if (v.empty()) {
                return 0.0;
            }
            const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
            return *hi - *lo;
        };
        return spread(alphas) <= tol && spread(betas) <= tol;
    }
};

inline Matrix tridiagonal_from(std::span<const double> alphas, std::span<const double> betas) {
    if (alphas.empty() || betas.size() + 1 != alphas.size()) {
        throw Error(ErrorCode::LengthMismatch, "tridiagonal needs k alphas and k-1 betas, got " +
                                                   std::to_string(alphas.size()) + " and " +
                                                   std::to_string(betas.size()));
    }
    Matrix t(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        t(i, i) = alphas[i];
        if (i < betas.size()) {
            t(i, i + 1) = betas[i];
            t(i + 1, i) = betas[i];
        }
    }
    return t;
}

inline Matrix LanczosOutput::tridiagonal() const { return tridiagonal_from(alphas, betas); }

/// max |V^dagger V - I| over the columns in `basis`.
inline double orthogonality_defect(const std::vector<CVector> &basis) {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const Complex g = inner(basis[i], basis[j]);
            worst = std::max(worst, std::abs(g - (i == j ? Complex(1.0) : Complex{})));
        }
    }
    return worst;
}

/// Hermitian Lanczos: q1 = start/|start|, r = A q_j - beta_{j-1} q_{j-1},
/// alpha_j = q_j^dagger r, r -= alpha_j q_j, beta_j = |r|. Stops after k
/// steps or when beta_j < options.breakdown (invariant Krylov subspace).
inline LanczosOutput lanczos_tridiagonalize(const Matrix &a, std::span<const Complex> start, std::size_t k,
                                            const LanczosOptions &options = {}) {
    const std::size_t n = a.dim();
    const double defect = hermiticity_defect(a);
    if (!(defect <= kHermitianTolerance)) {
        throw Error(ErrorCode::NotHermitian, "Lanczos input has max |A - A^dagger| = " + std::to_string(defect));
    }
    if (start.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "start vector length " + std::to_string(start.size()) +
                                                      " vs matrix dim " + std::to_string(n));
    }
    if (k < 1 || k > n) {
        throw Error(ErrorCode::InvalidParams, "Lanczos steps must satisfy 1 <= k <= dim");
    }
    const double start_norm = norm2(start);
    if (!(start_norm > 0.0)) {
        throw Error(ErrorCode::ZeroStartVector, "Lanczos start vector is zero");
    }

    LanczosOutput out;
    CVector q(start.begin(), start.end());
    for (auto &x : q) {
        x /= start_norm;
    }
    out.basis.push_back(q);

    for (std::size_t j = 0; j < k; ++j) {
        const CVector &qj = out.basis[j];
        CVector r = a * std::span<const Complex>(qj);
        if (j > 0) {
            const CVector &prev = out.basis[j - 1];
            for (std::size_t i = 0; i < n; ++i) {
                r[i] -= out.betas[j - 1] * prev[i];
            }
        }
        const double alpha = std::real(inner(qj, r));
        for (std::size_t i = 0; i < n; ++i) {
            r[i] -= alpha * qj[i];
        }
        out.alphas.push_back(alpha);

        if (options.reorthogonalize) {
            // Two passes keep the basis orthonormal to roundoff.
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto &v : out.basis) {
                    const Complex c = inner(v, r);
                    for (std::size_t i = 0; i < n; ++i) {
                        r[i] -= c * v[i];
                    }
                }
            }
        }

        if (j + 1 == k) {
            break;
        }
        const double beta = norm2(r);
        if (beta < options.breakdown) {
            out.terminated_early = true;
            break;
        }
        out.betas.push_back(beta);
        for (auto &x : r) {
            x /= beta;
        }
        out.basis.push_back(std::move(r));
    }

    out.orthogonality_loss = orthogonality_defect(out.basis);
    return out;
}

/// max |A V - V T| over the computed columns. Only an invariant-subspace
/// residual when the run broke down early; otherwise the last column carries
/// the residual beta_k q_{k+1}.
inline double krylov_residual(const Matrix &a, const LanczosOutput &out) {
    const Matrix t = out.tridiagonal();
    const std::size_t k = out.steps();
    double worst = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        CVector lhs = a * std::span<const Complex>(out.basis[c]);
        for (std::size_t r = 0; r < k; ++r) {
            const Complex trc = t(r, c);
            if (trc == Complex{}) {
                continue;
            }
            for (std::size_t i = 0; i < lhs.size(); ++i) {
                lhs[i] -= out.basis[r][i] * trc;
            }
        }
        for (const auto &x : lhs) {
            worst = std::max(worst, std::abs(x));
        }
    }
    return worst;
}

}  // namespace tqc
