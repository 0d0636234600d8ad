// Copyright 2026 The qcs Authors
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

#include "qcs/phase_space.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "qcs/complete_state.h"
#include "qcs/factorization.h"
#include "qcs/random_objects.h"
#include "test_util.h"

using namespace qcs;
using namespace qcs::testing;

namespace {

PhaseSpaceState random_phase_state(Rng &rng, Rational spin, PhaseSpaceGrid grid) {
    auto count = static_cast<std::size_t>((spin * 2).numerator() + 1);
    auto psi = random_state(rng, count * grid.n);
    return PhaseSpaceState::from_coefficients(spin, grid, psi.amplitudes());
}

PhaseSpaceState plane_wave(PhaseSpaceGrid grid, int k) {
    CVector v(static_cast<Eigen::Index>(grid.n));
    for (std::size_t j = 0; j < grid.n; ++j) {
        v[static_cast<Eigen::Index>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * k * static_cast<double>(j) / grid.n);
    }
    v /= std::sqrt(v.squaredNorm() * grid.dq);
    return PhaseSpaceState(Rational(0), grid, {v});
}

}  // namespace

TEST(phase_space_grid, coordinates) {
    PhaseSpaceGrid grid{8, 0.5};
    EXPECT_EQ(grid.q(4), 0.0);
    EXPECT_EQ(grid.q(0), -2.0);
    EXPECT_NEAR(grid.dp(), 2.0 * std::numbers::pi / 4.0, 1e-15);
    EXPECT_NEAR(grid.p(5), grid.dp(), 1e-15);
    EXPECT_QCS_ERROR((PhaseSpaceGrid{0, 1.0}).validate(), Errc::BadSpec);
    EXPECT_QCS_ERROR((PhaseSpaceGrid{4, -1.0}).validate(), Errc::BadSpec);
}

TEST(dft_matrix, is_unitary) {
    for (std::size_t n : {1u, 2u, 5u, 16u}) {
        CMatrix f = dft_matrix(n);
        EXPECT_LT(max_abs(f * f.adjoint() - CMatrix::Identity(n, n)), 1e-13);
    }
}

TEST(phase_space_state, validation) {
    PhaseSpaceGrid grid{4, 1.0};
    CVector v = CVector::Constant(4, 0.5);
    EXPECT_QCS_ERROR(PhaseSpaceState(Rational(1, 3), grid, {v}), Errc::BadSpec);
    EXPECT_QCS_ERROR(PhaseSpaceState(Rational(1, 2), grid, {v}), Errc::DimensionMismatch);
    EXPECT_QCS_ERROR(PhaseSpaceState(Rational(0), grid, {CVector::Constant(4, 1.0)}), Errc::NotNormalized);
    PhaseSpaceState ok(Rational(0), grid, {v});
    EXPECT_EQ(ok.dim(), 4u);
    EXPECT_NEAR(ok.pure_state().amplitudes().norm(), 1.0, 1e-15);
}

TEST(build_measure, delta_state) {
    PhaseSpaceGrid grid{8, 0.25};
    CVector v = CVector::Zero(8);
    v[3] = 1.0 / std::sqrt(grid.dq);
    auto mu = build_measure(PhaseSpaceState(Rational(0), grid, {v}));
    auto qm = mu.position_marginal();
    auto pm = mu.momentum_marginal();
    EXPECT_NEAR(qm[3], 1.0, 1e-15);
    for (std::size_t m = 0; m < 8; ++m) {
        EXPECT_NEAR(pm[m], 1.0 / 8.0, 1e-15);
    }
    EXPECT_NEAR(mu.total_mass(), 1.0, 1e-15);
}

TEST(build_measure, plane_wave) {
    PhaseSpaceGrid grid{8, 0.25};
    auto mu = build_measure(plane_wave(grid, 2));
    auto qm = mu.position_marginal();
    auto pm = mu.momentum_marginal();
    for (std::size_t j = 0; j < 8; ++j) {
        EXPECT_NEAR(qm[j], 1.0 / 8.0, 1e-15);
    }
    // Frequency k = 2 sits in slot k + N/2.
    EXPECT_NEAR(pm[6], 1.0, 1e-14);
}

TEST(build_measure, equal_sectors_are_normalized_products) {
    Rng rng(191);
    PhaseSpaceGrid grid{6, 0.5};
    auto state = random_phase_state(rng, Rational(1, 2), grid);
    auto mu = build_measure(state);
    ASSERT_EQ(mu.sector_count(), 2u);
    CMatrix f = dft_matrix(6);
    for (std::size_t s = 0; s < 2; ++s) {
        CVector a = state.sector(s) * std::sqrt(grid.dq);
        CVector b = f * a;
        double norm2 = a.squaredNorm();
        for (std::size_t j = 0; j < 6; ++j) {
            for (std::size_t m = 0; m < 6; ++m) {
                double expected = std::norm(a[j]) * std::norm(b[m]) / norm2;
                EXPECT_NEAR(mu.mass(s, j, m), expected, 1e-15);
                EXPECT_NEAR(mu.density(s, j, m), expected / (grid.dq * grid.dp()), 1e-13);
            }
        }
    }
}

TEST(build_measure, empty_sector_is_omitted) {
    PhaseSpaceGrid grid{4, 1.0};
    std::vector<CVector> sectors{CVector::Zero(4), CVector::Constant(4, 0.5)};
    auto mu = build_measure(PhaseSpaceState(Rational(1, 2), grid, sectors));
    ASSERT_EQ(mu.sector_count(), 1u);
    EXPECT_EQ(mu.sector_value(0), 0.5);
}

TEST(position_observable, three_cell_toy_state) {
    PhaseSpaceGrid grid{3, 1.0};
    CVector v(3);
    v << std::sqrt(0.2), std::sqrt(0.3), std::sqrt(0.5);
    auto mu = build_measure(PhaseSpaceState(Rational(0), grid, {v}));
    auto obs = position_observable(PiecewiseFn::identity(), mu);
    ASSERT_EQ(obs.distribution.size(), 3u);
    EXPECT_EQ(obs.distribution.support(0), -1.0);
    EXPECT_NEAR(obs.distribution.level(0), 0.2, 1e-12);
    EXPECT_NEAR(obs.distribution.level(1), 0.5, 1e-12);
    EXPECT_EQ(obs.distribution.level(2), 1.0);
}

TEST(position_observable, constant_and_indicator) {
    Rng rng(193);
    PhaseSpaceGrid grid{8, 0.5};
    auto state = random_phase_state(rng, Rational(0), grid);
    auto mu = build_measure(state);
    auto constant = position_observable(PiecewiseFn::constant(3.0), mu);
    ASSERT_EQ(constant.distribution.size(), 1u);
    EXPECT_EQ(constant.distribution.support(0), 3.0);
    auto region = position_observable(PiecewiseFn::indicator(-0.6, 0.6), mu);
    double region_mass = 0.0;
    auto qm = mu.position_marginal();
    for (std::size_t j = 0; j < 8; ++j) {
        if (grid.q(j) > -0.6 && grid.q(j) <= 0.6) {
            region_mass += qm[j];
        }
    }
    ASSERT_EQ(region.distribution.size(), 2u);
    EXPECT_NEAR(region.distribution.weight(1), region_mass, 1e-12);
}

TEST(position_observable, domain_gap) {
    PhaseSpaceGrid grid{4, 1.0};
    auto mu = build_measure(PhaseSpaceState(Rational(0), grid, {CVector::Constant(4, 0.5)}));
    EXPECT_QCS_ERROR(position_observable(PiecewiseFn({0.0, 10.0}, {{1.0}}), mu), Errc::DomainGap);
}

TEST(momentum_observable, plane_wave_point_mass) {
    PhaseSpaceGrid grid{8, 0.25};
    auto mu = build_measure(plane_wave(grid, -3));
    auto obs = momentum_observable(PiecewiseFn::identity(), mu);
    ASSERT_EQ(obs.distribution.size(), 1u);
    EXPECT_NEAR(obs.distribution.support(0), -3.0 * grid.dp(), 1e-12);
}

TEST(momentum_observable, zero_function_and_mean) {
    Rng rng(197);
    PhaseSpaceGrid grid{16, 0.4};
    auto state = random_phase_state(rng, Rational(1), grid);
    auto mu = build_measure(state);
    auto zero = momentum_observable(PiecewiseFn::constant(0.0), mu);
    ASSERT_EQ(zero.distribution.size(), 1u);
    EXPECT_EQ(zero.distribution.support(0), 0.0);
    auto p = momentum_observable(PiecewiseFn::identity(), mu);
    double label_mean = 0.0;
    for (std::size_t k = 0; k < p.distribution.size(); ++k) {
        label_mean += p.distribution.support(k) * p.distribution.weight(k);
    }
    auto op = momentum_operator(PiecewiseFn::identity(), state);
    EXPECT_NEAR(label_mean, expectation(op.matrix(), state.pure_state().amplitudes()), 1e-12);
}

TEST(spin_observable, half_spin_sector_masses) {
    PhaseSpaceGrid grid{4, 1.0};
    std::vector<CVector> sectors{CVector::Constant(4, 0.25), CVector::Constant(4, std::sqrt(0.75) / 2.0)};
    auto mu = build_measure(PhaseSpaceState(Rational(1, 2), grid, sectors));
    auto obs = spin_observable(mu);
    ASSERT_EQ(obs.distribution.size(), 2u);
    EXPECT_EQ(obs.distribution.support(0), -0.5);
    EXPECT_NEAR(obs.distribution.level(0), 0.25, 1e-15);
    EXPECT_EQ(obs.distribution.support(1), 0.5);
}

TEST(spin_observable, single_and_equal_sectors) {
    PhaseSpaceGrid grid{4, 1.0};
    auto single = spin_observable(build_measure(PhaseSpaceState(Rational(0), grid, {CVector::Constant(4, 0.5)})));
    ASSERT_EQ(single.distribution.size(), 1u);
    EXPECT_EQ(single.distribution.support(0), 0.0);
    auto equal = spin_observable(build_measure(gaussian_state(Rational(1), grid, 1.0, 0.0)));
    ASSERT_EQ(equal.distribution.size(), 3u);
    EXPECT_NEAR(equal.distribution.level(0), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(equal.distribution.level(1), 2.0 / 3.0, 1e-15);
}

TEST(to_unit_interval, single_cell) {
    PhaseSpaceGrid grid{1, 1.0};
    auto mu = build_measure(PhaseSpaceState(Rational(0), grid, {CVector::Constant(1, 1.0)}));
    auto layout = to_unit_interval(mu);
    EXPECT_EQ(layout.cuts, (std::vector<double>{0.0, 1.0}));
}

TEST(to_unit_interval, two_cells) {
    PhaseSpaceGrid grid{1, 1.0};
    std::vector<CVector> sectors{CVector::Constant(1, 0.5), CVector::Constant(1, std::sqrt(0.75))};
    auto mu = build_measure(PhaseSpaceState(Rational(1, 2), grid, sectors));
    auto layout = to_unit_interval(mu);
    ASSERT_EQ(layout.cuts.size(), 3u);
    EXPECT_NEAR(layout.cuts[1], 0.25, 1e-15);
    EXPECT_EQ(layout.cuts[2], 1.0);
}

TEST(to_unit_interval, barrier_composition_preserves_measure) {
    Rng rng(199);
    PhaseSpaceGrid grid{8, 0.5};
    auto state = random_phase_state(rng, Rational(1, 2), grid);
    auto mu = build_measure(state);
    auto obs = position_observable(PiecewiseFn::square(), mu);
    auto label_fn = pull_to_unit_interval(obs, to_unit_interval(mu));
    auto beta = factor_against_cdf(label_fn, obs.distribution);
    EXPECT_TRUE(verify_measure_preserving(beta));
    EXPECT_TRUE(verify_measure_preserving(compose(rotation_map(0.375), beta)));
    auto pushed = label_fn.pushforward(1e-12);
    ASSERT_EQ(pushed.size(), obs.distribution.size());
    for (std::size_t k = 0; k < pushed.size(); ++k) {
        EXPECT_NEAR(pushed[k].second, obs.distribution.weight(k), 1e-12);
    }
}

TEST(qmps, gaussian_half_spin) {
    PhaseSpaceGrid grid{64, 0.25};
    auto state = gaussian_state(Rational(1, 2), grid, 0.5, 1.5, {0.3, 0.7});
    auto mu = build_measure(state);
    auto position = qmps_check(position_operator(PiecewiseFn::identity(), state),
                               position_observable(PiecewiseFn::identity(), mu), state, mu);
    auto momentum = qmps_check(momentum_operator(PiecewiseFn::identity(), state),
                               momentum_observable(PiecewiseFn::identity(), mu), state, mu);
    auto spin = qmps_check(spin_operator(state), spin_observable(mu), state, mu);
    for (const auto &r : {position, momentum, spin}) {
        EXPECT_LT(r.gap, 1e-12);
        EXPECT_TRUE(r.barrier_preserves_measure);
    }
    EXPECT_NEAR(spin.operator_side, 0.2, 1e-12);
}

TEST(phase_space_properties, marginals_are_exact) {
    Rng rng(211);
    for (int t = 0; t < 20; ++t) {
        PhaseSpaceGrid grid{random_dim(rng, 2, 16), 0.3};
        auto state = random_phase_state(rng, Rational(1, 2), grid);
        auto mu = build_measure(state);
        CVector a = state.coefficients();
        CVector b = state.momentum_coefficients();
        auto qm = mu.position_marginal();
        auto pm = mu.momentum_marginal();
        for (std::size_t j = 0; j < grid.n; ++j) {
            double expected_q = 0.0;
            double expected_p = 0.0;
            for (std::size_t s = 0; s < 2; ++s) {
                expected_q += std::norm(a[s * grid.n + j]);
                expected_p += std::norm(b[s * grid.n + j]);
            }
            EXPECT_NEAR(qm[j], expected_q, 1e-14);
            EXPECT_NEAR(pm[j], expected_p, 1e-14);
        }
        EXPECT_NEAR(mu.total_mass(), 1.0, 1e-13);
    }
}

TEST(phase_space_properties, position_and_momentum_need_different_barriers) {
    PhaseSpaceGrid grid{64, 0.25};
    auto mu = build_measure(gaussian_state(Rational(0), grid, 0.5, 0.0));
    EXPECT_GT(shared_barrier_obstruction(PiecewiseFn::identity(), PiecewiseFn::identity(), mu), 1e-3);
}
