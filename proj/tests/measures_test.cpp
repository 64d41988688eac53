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

#include "tqc/measures.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace tqc;

namespace {

DensityMatrix singlet() {
    const CVector psi{0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
    return DensityMatrix(Matrix::outer(psi, psi), "singlet");
}

DensityMatrix local_rotation(const DensityMatrix &rho, const Matrix &ua, const Matrix &ub) {
    const Matrix u = kron(ua, ub);
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

}  // namespace

TEST(von_neumann_entropy, reference_values) {
    EXPECT_NEAR(von_neumann_entropy(singlet()), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(Matrix::identity(4) * 0.25)), 2.0, 1e-12);
    // {1/8, 1/8, 1/8, 5/8}
    const double expect = 3 * 0.125 * 3 + 0.625 * std::log2(1 / 0.625);
    EXPECT_NEAR(expect, 1.5487949406953987, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(werner_state(StateParam(0.5))), expect, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(Matrix::identity(2) * 0.5)), 1.0, 1e-15);
}

TEST(von_neumann_entropy, clamps_roundoff_negatives_only) {
    std::vector<double> tiny{0.5, 0.5, -5e-11};
    EXPECT_NEAR(entropy_bits(tiny), 1.0, 1e-15);
    std::vector<double> bad{0.6, 0.6, -0.2};
    EXPECT_THROW(entropy_bits(bad), Error);
}

TEST(concurrence, reference_states) {
    EXPECT_NEAR(concurrence(singlet()), 1.0, 1e-10);
    EXPECT_NEAR(concurrence(DensityMatrix(Matrix::identity(4) * 0.25)), 0.0, 1e-12);
    EXPECT_NEAR(concurrence(werner_state(StateParam(0.6))), 0.4, 1e-10);
    EXPECT_NEAR(concurrence(mems_state(StateParam(0.9))), 0.9, 1e-10);
}

TEST(concurrence, werner_closed_form_on_grid) {
    for (int k = 0; k <= 50; ++k) {
        const double g = k / 50.0;
        EXPECT_NEAR(concurrence(werner_state(StateParam(g))), std::max(0.0, (3 * g - 1) / 2), 1e-10) << g;
    }
}

TEST(concurrence, mems_matches_oracles) {
    for (int k = 0; k <= 50; ++k) {
        const auto r = mems_state(StateParam(k / 50.0));
        EXPECT_NEAR(concurrence(r), oracle::x_state_concurrence(r.matrix()), 1e-10);
        EXPECT_NEAR(concurrence(r), oracle::concurrence(r.matrix()), 1e-7);
    }
}

TEST(concurrence, random_states_match_qr_oracle) {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 40; ++rep) {
        // Mix towards a Bell state so that some samples are entangled.
        std::uniform_real_distribution<double> unit(0, 1);
        const double w = unit(rng);
        const Matrix r = oracle::random_density(4, rng) * (1 - w) + singlet().matrix() * w;
        const double c = concurrence(DensityMatrix(r));
        EXPECT_GE(c, 0.0);
        EXPECT_LE(c, 1.0);
        EXPECT_NEAR(c, oracle::concurrence(r), 1e-6);
    }
}

TEST(concurrence, frozen_values_for_evolved_mems) {
    // tau = b^n t; reference values from a 50-digit evaluation.
    const auto at = [](double g, double tau) {
        return concurrence(evolve(mems_state(StateParam(g)), {{1.0, 1.0, 1.0, 4}, tau}));
    };
    EXPECT_NEAR(at(0.3, 1.0), 0.0, 1e-10);
    EXPECT_NEAR(at(0.6, 0.7), 0.26289907876046855, 1e-9);
    EXPECT_NEAR(at(0.9, 2.2), 0.7596440868478067, 1e-9);
}

TEST(concurrence, invalid_state_raises) {
    const std::vector<double> d{0.6, -0.2, 0.6, 0.0};
    try {
        concurrence(DensityMatrix(Matrix::diagonal(d)));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NegativeEigenvalue);
    }
    // Not positive semidefinite but rho rho~ is: handled by the general path.
    const std::vector<double> d2{0.6, -0.1, 0.0, 0.5};
    EXPECT_NEAR(concurrence(DensityMatrix(Matrix::diagonal(d2))), 0.0, 1e-8);
    EXPECT_THROW(concurrence(DensityMatrix(Matrix::identity(2))), Error);
}

TEST(measurement_basis, projector_algebra) {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> th(0, std::numbers::pi), ph(0, 2 * std::numbers::pi);
    for (int rep = 0; rep < 50; ++rep) {
        const MeasurementBasis m{th(rng), ph(rng)};
        const Matrix p = m.projector(true), q = m.projector(false);
        EXPECT_LT(max_abs_diff(p + q, Matrix::identity(2)), 1e-12);
        EXPECT_LT(max_abs_diff(p * p, p), 1e-12);
        EXPECT_LT(max_abs(p * q), 1e-12);
    }
}

TEST(measurement_basis, canonical_keeps_projector) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> wide(-20, 20);
    for (int rep = 0; rep < 50; ++rep) {
        const MeasurementBasis m{wide(rng), wide(rng)};
        const auto c = m.canonical();
        EXPECT_GE(c.theta, 0.0);
        EXPECT_LE(c.theta, std::numbers::pi);
        EXPECT_GE(c.phi, 0.0);
        EXPECT_LT(c.phi, 2 * std::numbers::pi);
        EXPECT_LT(max_abs_diff(m.projector(true), c.projector(true)), 1e-12);
    }
}

TEST(conditional_entropy, product_state_gives_marginal_entropy) {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 20; ++rep) {
        const DensityMatrix ra(oracle::random_density(2, rng)), rb(oracle::random_density(2, rng));
        const auto rho = tensor_product(ra, rb);
        const MeasurementBasis m{0.3 * rep, 0.1 * rep};
        EXPECT_NEAR(conditional_entropy(rho, m), von_neumann_entropy(rb), 1e-10);
    }
}

TEST(conditional_entropy, singlet_conditionals_are_pure) {
    for (double th : {0.0, 0.4, 1.3, std::numbers::pi}) {
        for (double ph : {0.0, 2.0, 5.5}) {
            EXPECT_NEAR(conditional_entropy(singlet(), {th, ph}), 0.0, 1e-10);
        }
    }
}

TEST(conditional_entropy, werner_half_in_z_basis) {
    // Outcome 0 or 1 on A (p = 1/2 each) leaves B in diag(1/4, 3/4) or diag(3/4, 1/4).
    EXPECT_NEAR(conditional_entropy(werner_state(StateParam(0.5)), {0.0, 0.0}), oracle::h2(0.25), 1e-12);
    EXPECT_NEAR(oracle::h2(0.25), 0.8112781244591328, 1e-12);
}

TEST(conditional_entropy, matches_explicit_projection_oracle) {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> th(0, std::numbers::pi), ph(0, 2 * std::numbers::pi);
    for (int rep = 0; rep < 40; ++rep) {
        const DensityMatrix rho(oracle::random_density(4, rng));
        const MeasurementBasis m{th(rng), ph(rng)};
        EXPECT_NEAR(conditional_entropy(rho, m), oracle::conditional_entropy(oracle::to_array(rho.matrix()), m.theta,
                                                                             m.phi),
                    1e-10);
    }
}

TEST(conditional_entropy, bounded_by_marginal_entropy_on_corpus) {
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> th(0, std::numbers::pi), ph(0, 2 * std::numbers::pi);
    std::vector<DensityMatrix> corpus;
    for (int k = 0; k <= 10; ++k) {
        corpus.push_back(werner_state(StateParam(k / 10.0)));
        corpus.push_back(mems_state(StateParam(k / 10.0)));
    }
    for (int k = 0; k < 20; ++k) {
        corpus.emplace_back(oracle::random_density(4, rng));
    }
    for (const auto &rho : corpus) {
        const double sb = von_neumann_entropy(partial_trace(rho, Subsystem::B));
        for (int rep = 0; rep < 20; ++rep) {
            EXPECT_LE(conditional_entropy(rho, {th(rng), ph(rng)}), sb + 1e-9);
        }
    }
}

TEST(discord, product_and_maximally_mixed_states_vanish) {
    std::mt19937_64 rng(79);
    for (int rep = 0; rep < 10; ++rep) {
        const auto rho = tensor_product(DensityMatrix(oracle::random_density(2, rng)),
                                        DensityMatrix(oracle::random_density(2, rng)));
        EXPECT_LE(std::abs(discord(rho).discord), 1e-6);
    }
    EXPECT_NEAR(discord(werner_state(StateParam(0.0))).discord, 0.0, 1e-10);
}

TEST(discord, singlet_is_one_bit) {
    const auto r = discord(singlet());
    EXPECT_NEAR(r.discord, 1.0, 1e-6);
    EXPECT_NEAR(r.mutual_information, 2.0, 1e-9);
    EXPECT_NEAR(r.classical_correlation, 1.0, 1e-6);
    EXPECT_FALSE(r.refinement_failed);
}

TEST(discord, werner_matches_closed_form_and_brute_force) {
    for (double g : {0.3, 0.5, 0.8}) {
        const auto r = discord(werner_state(StateParam(g)));
        EXPECT_NEAR(r.discord, oracle::werner_discord(g), 1e-8) << g;
    }
    EXPECT_NEAR(oracle::werner_discord(0.8), 0.6214109137647063, 1e-12);
    const auto brute = oracle::brute_force_discord(werner_state(StateParam(0.8)).matrix(), 400);
    EXPECT_NEAR(discord(werner_state(StateParam(0.8))).discord, brute.discord, 1e-4);
}

TEST(discord, mems_frozen_values) {
    // Dense grid plus local polish, computed independently.
    EXPECT_NEAR(discord(mems_state(StateParam(0.3))).discord, 0.10096788113692201, 1e-7);
    EXPECT_NEAR(discord(mems_state(StateParam(0.6))).discord, 0.43569749472764085, 1e-7);
    EXPECT_NEAR(discord(mems_state(StateParam(0.9))).discord, 0.7982936593183942, 1e-7);
}

TEST(discord, result_is_self_consistent) {
    std::mt19937_64 rng(83);
    for (int rep = 0; rep < 15; ++rep) {
        const DensityMatrix rho(oracle::random_density(4, rng));
        const auto r = discord(rho);
        EXPECT_NEAR(r.discord, r.mutual_information - r.classical_correlation, 1e-9);
        EXPECT_GE(r.discord, -1e-8);
        EXPECT_LE(r.refined_minimum, r.coarse_minimum + 1e-9);
        EXPECT_FALSE(r.refinement_failed);
        EXPECT_LE(r.optimizer_evals, 64 * 64 + 3 * 500);
        EXPECT_NEAR(conditional_entropy(rho, r.argmin_basis), r.refined_minimum, 1e-9);
    }
}

TEST(discord, local_unitary_invariance) {
    std::mt19937_64 rng(89);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityMatrix rho(oracle::random_density(4, rng) * 0.5 + mems_state(StateParam(0.8)).matrix() * 0.5);
        const auto moved = local_rotation(rho, oracle::random_unitary2(rng), oracle::random_unitary2(rng));
        EXPECT_NEAR(concurrence(moved), concurrence(rho), 1e-6);
        EXPECT_NEAR(discord(moved).discord, discord(rho).discord, 1e-6);
    }
}

TEST(correlations_at, zero_time_matches_direct_measures) {
    const auto rho0 = werner_state(StateParam(0.5));
    const auto c = correlations_at(rho0, {{1.0, 2.0, 1.0, 4}, 0.0});
    EXPECT_NEAR(c.concurrence, concurrence(rho0), 1e-12);
    EXPECT_NEAR(c.discord.discord, discord(rho0).discord, 1e-10);
}

TEST(correlations_at, discord_survives_sudden_death) {
    // b = 2, n = 1, t = 0.5 lies inside the first zero-concurrence window.
    const auto c = correlations_at(mems_state(StateParam(0.3)), {{1.0, 2.0, 1.0, 4}, 0.5});
    EXPECT_EQ(c.concurrence, 0.0);
    EXPECT_NEAR(c.discord.discord, 0.14772082736884196, 1e-7);
}

TEST(correlations_at, independent_of_diagonal_base) {
    for (double a : {0.5, 1.0, 4.0, 9.0}) {
        const auto c = correlations_at(mems_state(StateParam(0.6)), {{a, 2.0, 1.3, 4}, 0.8});
        const auto ref = correlations_at(mems_state(StateParam(0.6)), {{1.0, 2.0, 1.3, 4}, 0.8});
        EXPECT_NEAR(c.concurrence, ref.concurrence, 1e-10);
        EXPECT_NEAR(c.discord.discord, ref.discord.discord, 1e-10);
    }
}
