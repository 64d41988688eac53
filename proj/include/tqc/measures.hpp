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

// Entropies, concurrence and quantum discord of two-qubit states. All
// entropies are in bits. Discord measures subsystem A with rank-1 projectors.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tqc/error.hpp"
#include "tqc/evolution.hpp"
#include "tqc/linalg.hpp"
#include "tqc/nelder_mead.hpp"
#include "tqc/states.hpp"

namespace tqc {

inline constexpr double kEntropyZeroFloor = 1e-12;
inline constexpr double kConcurrenceNegativeTolerance = 1e-8;
inline constexpr double kOutcomeProbabilityFloor = 1e-14;

/// -sum p log2 p. Values in [-kPsdTolerance, kEntropyZeroFloor] count as 0.
inline double entropy_bits(std::span<const double> spectrum) {
    double s = 0.0;
    for (double p : spectrum) {
        if (p < -kPsdTolerance) {
            throw Error(ErrorCode::NegativeEigenvalue, "entropy of a spectrum containing " + std::to_string(p));
        }
        if (p > kEntropyZeroFloor) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

namespace detail {

inline std::array<double, 2> hermitian2_eigenvalues(Complex a00, Complex a01, Complex a11) {
    const double mean = 0.5 * (std::real(a00) + std::real(a11));
    const double half_gap = 0.5 * (std::real(a00) - std::real(a11));
    const double r = std::hypot(half_gap, std::abs(a01));
    return {mean - r, mean + r};
}

inline double entropy2(Complex a00, Complex a01, Complex a11) {
    const auto ev = hermitian2_eigenvalues(a00, a01, a11);
    return entropy_bits(ev);
}

inline void require_two_qubit(const DensityMatrix &rho, const char *what) {
    if (rho.dim() != 4) {
        throw Error(ErrorCode::BadDimension,
                    std::string(what) + " needs a 4x4 two-qubit state, got dim " + std::to_string(rho.dim()));
    }
}

using Dense4 = std::array<Complex, 16>;

inline Dense4 flatten(const DensityMatrix &rho) {
    Dense4 r;
    std::copy(rho.matrix().data().begin(), rho.matrix().data().end(), r.begin());
    return r;
}

/// <u|_A rho |u>_A, the unnormalized state of B after outcome u on A.
inline std::array<Complex, 3> conditional_block(const Dense4 &rho, const std::array<Complex, 2> &u) {
    // Entries (0,0), (0,1), (1,1) of the 2x2 result.
    std::array<Complex, 3> out{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const Complex w = std::conj(u[i]) * u[j];
            out[0] += w * rho[(2 * i + 0) * 4 + (2 * j + 0)];
            out[1] += w * rho[(2 * i + 0) * 4 + (2 * j + 1)];
            out[2] += w * rho[(2 * i + 1) * 4 + (2 * j + 1)];
        }
    }
    return out;
}

}  // namespace detail

inline double von_neumann_entropy(const DensityMatrix &rho) {
    if (rho.dim() == 2) {
        return detail::entropy2(rho(0, 0), rho(0, 1), rho(1, 1));
    }
    return entropy_bits(hermitian_eig(rho.matrix()).values);
}

/// Wootters concurrence max{0, l1 - l2 - l3 - l4}, l_i the descending square
/// roots of the eigenvalues of rho * (Y x Y) rho^* (Y x Y).
///
/// The eigenvalues are taken from the Hermitian similar matrix
/// sqrt(rho) rho~ sqrt(rho) when rho is positive semidefinite, otherwise from
/// rho rho~ directly with imaginary parts below 1e-8 dropped.
inline double concurrence(const DensityMatrix &rho) {
    detail::require_two_qubit(rho, "concurrence");
    static const Matrix yy = kron(pauli_y(), pauli_y());
    const Matrix tilde = yy * rho.matrix().conjugate() * yy;

    const Matrix sym = 0.5 * (rho.matrix() + rho.matrix().adjoint());
    const auto eig = hermitian_eig(sym);
    std::vector<double> mu;
    if (eig.values.front() >= -kPsdTolerance) {
        const Matrix root = matrix_function(eig, [](double l) { return std::sqrt(std::max(l, 0.0)); });
        Matrix r = root * tilde * root;
        r = 0.5 * (r + r.adjoint());
        mu = hermitian_eig(r).values;
    } else {
        for (const Complex &z : general_eigenvalues(rho.matrix() * tilde)) {
            mu.push_back(std::abs(std::imag(z)) < 1e-8 ? std::real(z) : std::abs(z));
        }
    }

    std::array<double, 4> lambda{};
    for (std::size_t k = 0; k < 4; ++k) {
        if (mu[k] < -kConcurrenceNegativeTolerance) {
            throw Error(ErrorCode::NegativeEigenvalue,
                        "rho * rho~ has eigenvalue " + std::to_string(mu[k]) + "; input is not a valid state");
        }
        lambda[k] = std::sqrt(std::max(mu[k], 0.0));
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

/// Rank-1 projective measurement {|v><v|, 1 - |v><v|} with
/// |v> = (cos(theta/2), e^{i phi} sin(theta/2)).
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;

    std::array<Complex, 2> plus_vector() const {
        return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
    }
    std::array<Complex, 2> minus_vector() const {
        return {-std::sin(theta / 2.0), std::polar(std::cos(theta / 2.0), phi)};
    }

    Matrix projector(bool plus) const {
        const auto v = plus ? plus_vector() : minus_vector();
        return Matrix::outer(v, v);
    }

    /// Same projector pair with theta in [0, pi] and phi in [0, 2 pi).
    MeasurementBasis canonical() const {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        double t = std::fmod(theta, two_pi);
        double p = phi;
        if (t < 0.0) {
            t += two_pi;
        }
        if (t > std::numbers::pi) {
            // (theta, phi) and (2 pi - theta, phi + pi) give the same ray.
            t = two_pi - t;
            p += std::numbers::pi;
        }
        p = std::fmod(p, two_pi);
        if (p < 0.0) {
            p += two_pi;
        }
        return {t, p};
    }
};

namespace detail {

inline double conditional_entropy(const Dense4 &rho, double theta, double phi) {
    const MeasurementBasis basis{theta, phi};
    double s = 0.0;
    for (const auto &u : {basis.plus_vector(), basis.minus_vector()}) {
        const auto blk = conditional_block(rho, u);
        const double p = std::real(blk[0] + blk[2]);
        if (p < kOutcomeProbabilityFloor) {
            continue;
        }
        s += p * entropy2(blk[0] / p, blk[1] / p, blk[2] / p);
    }
    return s;
}

}  // namespace detail

/// S(rho|M) = sum_i p_i S(rho_B|i) for the measurement on A.
inline double conditional_entropy(const DensityMatrix &rho, const MeasurementBasis &basis) {
    detail::require_two_qubit(rho, "conditional entropy");
    return detail::conditional_entropy(detail::flatten(rho), basis.theta, basis.phi);
}

struct DiscordOptions {
    int grid_theta = 64;
    int grid_phi = 64;
    int refine_starts = 3;
    SimplexOptions simplex{};
};

struct DiscordResult {
    double discord = 0.0;
    double classical_correlation = 0.0;
    double mutual_information = 0.0;
    MeasurementBasis argmin_basis;
    int optimizer_evals = 0;
    double coarse_minimum = 0.0;   // min of S(rho|M) over the grid
    double refined_minimum = 0.0;  // min after simplex refinement
    // Set when refinement ended above the coarse minimum; the coarse value is
    // reported instead.
    bool refinement_failed = false;
};

/// Discord S(rho_A) - S(rho) + min_M S(rho|M) with the minimum found by a
/// theta/phi grid followed by Nelder-Mead from the best few grid points.
inline DiscordResult discord(const DensityMatrix &rho, const DiscordOptions &opt = {}) {
    detail::require_two_qubit(rho, "discord");
    if (opt.grid_theta < 2 || opt.grid_phi < 1 || opt.refine_starts < 0) {
        throw Error(ErrorCode::InvalidParams, "discord grid needs >= 2 theta and >= 1 phi points");
    }
    const auto flat = detail::flatten(rho);
    auto objective = [&](double theta, double phi) { return detail::conditional_entropy(flat, theta, phi); };

    const double dtheta = std::numbers::pi / (opt.grid_theta - 1);
    const double dphi = 2.0 * std::numbers::pi / opt.grid_phi;
    struct GridPoint {
        double value;
        double theta;
        double phi;
    };
    std::vector<GridPoint> grid;
    grid.reserve(static_cast<std::size_t>(opt.grid_theta) * opt.grid_phi);
    for (int i = 0; i < opt.grid_theta; ++i) {
        for (int j = 0; j < opt.grid_phi; ++j) {
            const double th = i * dtheta;
            const double ph = j * dphi;
            grid.push_back({objective(th, ph), th, ph});
        }
    }
    int evals = static_cast<int>(grid.size());
    const std::size_t starts = std::min<std::size_t>(opt.refine_starts, grid.size());
    std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(std::max<std::size_t>(starts, 1)),
                      grid.end(), [](const GridPoint &l, const GridPoint &r) { return l.value < r.value; });

    DiscordResult out;
    out.coarse_minimum = grid.front().value;
    double best = grid.front().value;
    MeasurementBasis best_basis{grid.front().theta, grid.front().phi};
    for (std::size_t s = 0; s < starts; ++s) {
        auto res = nelder_mead<2>([&](const std::array<double, 2> &x) { return objective(x[0], x[1]); },
                                  {grid[s].theta, grid[s].phi}, {dtheta, dphi}, opt.simplex);
        evals += res.evaluations;
        if (res.value < best) {
            best = res.value;
            best_basis = {res.x[0], res.x[1]};
        }
    }
    out.refined_minimum = best;
    if (!(out.refined_minimum <= out.coarse_minimum + 1e-9)) {
        out.refinement_failed = true;
        best = out.coarse_minimum;
        best_basis = {grid.front().theta, grid.front().phi};
    }

    const double s_ab = von_neumann_entropy(rho);
    const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
    const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));

    out.mutual_information = s_a + s_b - s_ab;
    out.classical_correlation = s_b - best;
    double q = s_a - s_ab + best;
    if (q < 0.0 && q >= -1e-8) {
        q = 0.0;
    }
    out.discord = q;
    out.argmin_basis = best_basis.canonical();
    out.optimizer_evals = evals;
    return out;
}

struct Correlations {
    double concurrence = 0.0;
    DiscordResult discord;
};

inline Correlations measure_correlations(const DensityMatrix &rho, const DiscordOptions &opt = {}) {
    return {concurrence(rho), discord(rho, opt)};
}

/// Evolve rho0 under the Toeplitz Hamiltonian, then measure.
inline Correlations correlations_at(const DensityMatrix &rho0, const EvolutionSpec &spec,
                                    const DiscordOptions &opt = {}) {
    return measure_correlations(evolve(rho0, spec), opt);
}

}  // namespace tqc
