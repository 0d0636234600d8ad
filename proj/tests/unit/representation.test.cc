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

#include "qcs/representation.h"

#include "gtest/gtest.h"

#include "qcs/complete_state.h"
#include "qcs/factorization.h"
#include "qcs/random_objects.h"
#include "test_util.h"

using namespace qcs;
using namespace qcs::testing;

namespace {

ThreeBlockModel example_model() {
    return three_block_model({0.125, 0.25, 0.625});
}

}  // namespace

TEST(three_block_model, structure) {
    auto m = example_model();
    EXPECT_LT(max_abs(m.e * m.f), 1e-15);
    EXPECT_LT(max_abs(m.f * m.g), 1e-15);
    EXPECT_LT(max_abs(m.e * m.g), 1e-15);
    EXPECT_LT(max_abs(m.e + m.f + m.g - CMatrix::Identity(7, 7)), 1e-15);
    EXPECT_EQ(expectation(m.e, m.psi.amplitudes()), 0.125);
    EXPECT_EQ(expectation(m.f, m.psi.amplitudes()), 0.25);
    EXPECT_EQ(expectation(m.g, m.psi.amplitudes()), 0.625);
    EXPECT_LT(max_abs(m.a_squared.matrix() - m.a.matrix() * m.a.matrix()), 1e-15);
}

TEST(dyadic_amplitudes, squares_sum_exactly) {
    for (double w : {0.125, 0.25, 0.625, 0.5, 0.375, 0.8125}) {
        double total = 0.0;
        for (double a : dyadic_amplitudes(w)) {
            total += a * a;
        }
        EXPECT_EQ(total, w);
    }
}

TEST(monotone_compose_check, affine_and_identity) {
    auto m = example_model();
    EXPECT_TRUE(monotone_compose_check(PiecewiseFn::affine(2.0, 1.0), m.a, m.psi, PiecewiseAffineMap::identity()));
    EXPECT_TRUE(monotone_compose_check(PiecewiseFn::identity(), m.a, m.psi, rotation_map(0.375)));
    EXPECT_QCS_ERROR(monotone_compose_check(PiecewiseFn::square(), m.a, m.psi, PiecewiseAffineMap::identity()),
                     Errc::NotMonotone);
}

TEST(monotone_compose_check, random_increasing_maps) {
    Rng rng(71);
    for (int t = 0; t < 50; ++t) {
        auto a = random_degenerate_hermitian(rng, random_dim(rng, 2, 6));
        auto psi = random_state(rng, a.dim());
        auto alpha = build_map(random_map_spec(rng));
        EXPECT_TRUE(monotone_compose_check(PiecewiseFn::monomial(3), a, psi, alpha));
        EXPECT_TRUE(monotone_compose_check(PiecewiseFn::affine(0.5, -3.0), a, psi, alpha));
    }
}

TEST(no_go, same_barrier_disagreement_is_half) {
    auto id = PiecewiseAffineMap::identity();
    auto m = example_model();
    EXPECT_EQ(composition_disagreement(m.a, PiecewiseFn::square(), m.psi, id, id), 0.5);
    auto w = no_go_witness(id);
    EXPECT_EQ(w.disagreement, 0.5);
}

TEST(no_go, square_of_values_against_values_of_square) {
    auto m = example_model();
    auto id = PiecewiseAffineMap::identity();
    auto squared = value_function(m.a, m.psi, id).map_values([](double x) { return x * x; });
    auto of_square = value_function(m.a_squared, m.psi, id);
    EXPECT_EQ(squared.level_set(1.0).symmetric_difference(IntervalSet({{0.0, 0.625}, {0.875, 1.0}})).measure(), 0.0);
    EXPECT_EQ(of_square.level_set(1.0).symmetric_difference(IntervalSet({{0.25, 1.0}})).measure(), 0.0);
    EXPECT_EQ(squared.disagreement(of_square), 0.5);
}

TEST(no_go, rotation_repair_is_exact) {
    auto m = example_model();
    auto id = PiecewiseAffineMap::identity();
    auto beta = build_map(MapSpec::composition({MapSpec::identity(), MapSpec::rotation(Rational(3, 8))}));
    EXPECT_EQ(composition_disagreement(m.a, PiecewiseFn::square(), m.psi, id, beta), 0.0);
}

TEST(no_go, disagreement_positive_for_every_sampled_barrier) {
    Rng rng(73);
    for (int t = 0; t < 50; ++t) {
        auto alpha = build_map(random_map_spec(rng));
        EXPECT_NEAR(no_go_witness(alpha).disagreement, 0.5, 1e-12);
    }
}

TEST(repair_barrier, example_reproduces_rotation) {
    auto m = example_model();
    auto id = PiecewiseAffineMap::identity();
    auto beta = repair_barrier(m.a, PiecewiseFn::square(), id, m.psi);
    EXPECT_TRUE(verify_measure_preserving(beta));
    EXPECT_EQ(composition_disagreement(m.a, PiecewiseFn::square(), m.psi, id, beta), 0.0);
    auto cdf = spectral_cdf(m.a_squared, m.psi);
    auto induced = compose(quantile_function(cdf), beta);
    auto rotated = compose(quantile_function(cdf), rotation_map(0.375));
    EXPECT_EQ(induced.disagreement(rotated), 0.0);
}

TEST(repair_barrier, random_operators_and_functions) {
    Rng rng(79);
    const PiecewiseFn fns[] = {PiecewiseFn::square(), PiecewiseFn::absolute(), PiecewiseFn::indicator(-0.5, 0.5)};
    for (int t = 0; t < 50; ++t) {
        auto a = random_degenerate_hermitian(rng, random_dim(rng, 2, 6));
        auto psi = random_state(rng, a.dim());
        auto alpha = build_map(random_map_spec(rng));
        for (const auto &b : fns) {
            auto beta = repair_barrier(a, b, alpha, psi);
            EXPECT_TRUE(verify_measure_preserving(beta));
            EXPECT_EQ(composition_disagreement(a, b, psi, alpha, beta), 0.0);
        }
    }
}

TEST(spectrum_image, identity_and_example) {
    auto id = PiecewiseAffineMap::identity();
    auto one = HermitianOperator::identity(3);
    auto probes = standard_probes(3);
    auto r1 = spectrum_image_check(one, id, probes);
    EXPECT_TRUE(r1.closed);
    EXPECT_EQ(r1.image, (std::vector<double>{1.0}));

    auto m = example_model();
    std::vector<PureState> only{m.psi};
    auto r2 = spectrum_image_check(m.a, id, only);
    EXPECT_TRUE(r2.closed);
    EXPECT_EQ(r2.image, (std::vector<double>{-1.0, 0.0, 1.0}));
    EXPECT_EQ(r2.image, r2.spectrum);
}

TEST(spectrum_image, eigenvector_probes_reach_all_values) {
    Rng rng(83);
    for (int t = 0; t < 30; ++t) {
        auto a = random_degenerate_hermitian(rng, random_dim(rng, 2, 7));
        auto alpha = build_map(random_map_spec(rng));
        auto r = spectrum_image_check(a, alpha, eigenvector_probes(a));
        EXPECT_TRUE(r.closed);
        EXPECT_EQ(r.image, r.spectrum);
    }
}

TEST(identifiability, examples) {
    auto id = PiecewiseAffineMap::identity();
    auto probes = standard_probes(2);
    auto same = identifiability_check(HermitianOperator(pauli_x()), HermitianOperator(pauli_x()), id, probes);
    EXPECT_TRUE(same.agree);
    EXPECT_TRUE(same.operators_equal);
    EXPECT_TRUE(same.implication_holds);
    auto flipped = identifiability_check(HermitianOperator(pauli_z()), HermitianOperator(-pauli_z()), id, probes);
    EXPECT_FALSE(flipped.agree);
    EXPECT_FALSE(flipped.operators_equal);
    EXPECT_TRUE(flipped.implication_holds);
}

TEST(identifiability, probes_span_hermitian_forms) {
    auto probes = standard_probes(3);
    EXPECT_EQ(probes.size(), 9u);
}
