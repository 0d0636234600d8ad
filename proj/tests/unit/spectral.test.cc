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

#include "qcs/spectral.h"

#include <map>
#include <thread>

#include "gtest/gtest.h"

#include "qcs/random_objects.h"
#include "qcs/representation.h"
#include "test_util.h"

using namespace qcs;
using namespace qcs::testing;

TEST(eigensystem, identity_has_one_atom) {
    auto es = eigensystem(HermitianOperator::identity(2));
    ASSERT_EQ(es.size(), 1u);
    EXPECT_EQ(es.atoms()[0].value, 1.0);
    EXPECT_LT(max_abs(es.atoms()[0].projector - CMatrix::Identity(2, 2)), 1e-12);
}

TEST(eigensystem, pauli_z_is_already_diagonal) {
    auto es = eigensystem(HermitianOperator(pauli_z()));
    ASSERT_EQ(es.size(), 2u);
    EXPECT_NEAR(es.atoms()[0].value, -1.0, 1e-15);
    EXPECT_NEAR(es.atoms()[1].value, 1.0, 1e-15);
    EXPECT_NEAR(es.atoms()[0].projector(1, 1).real(), 1.0, 1e-15);
    EXPECT_NEAR(es.atoms()[1].projector(0, 0).real(), 1.0, 1e-15);
}

TEST(eigensystem, pauli_x_projectors) {
    auto es = eigensystem(HermitianOperator(pauli_x()));
    CMatrix id = CMatrix::Identity(2, 2);
    CMatrix p_minus = 0.5 * (id - pauli_x());
    CMatrix p_plus = 0.5 * (id + pauli_x());
    ASSERT_EQ(es.size(), 2u);
    EXPECT_LT(max_abs(es.atoms()[0].projector - p_minus), 1e-12);
    EXPECT_LT(max_abs(es.atoms()[1].projector - p_plus), 1e-12);
    EXPECT_LT(max_abs(es.reconstruct() - pauli_x()), 1e-12);
    for (const auto &atom : es.atoms()) {
        EXPECT_LT(max_abs(atom.projector * atom.projector - atom.projector), 1e-12);
    }
}

TEST(eigensystem, merges_near_degenerate_eigenvalues) {
    CMatrix m = CMatrix::Identity(3, 3);
    m(1, 1) = 1.0 + 1e-13;
    m(2, 2) = 2.0;
    auto es = eigensystem(HermitianOperator(m));
    ASSERT_EQ(es.size(), 2u);
    EXPECT_NEAR(es.atoms()[0].projector.trace().real(), 2.0, 1e-12);
}

TEST(eigensystem, rejects_non_hermitian) {
    CMatrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    EXPECT_QCS_ERROR(HermitianOperator(m), Errc::NonHermitian);
}

TEST(eigensystem, cache_is_shared_and_race_free) {
    Rng rng(3);
    auto a = random_hermitian(rng, 6);
    std::vector<std::thread> threads;
    std::vector<const EigenSystem *> seen(4);
    for (int i = 0; i < 4; ++i) {
        threads.emplace_back([&, i] { seen[i] = &a.eigensystem(); });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto *p : seen) {
        EXPECT_EQ(p, seen[0]);
    }
}

TEST(pure_state, normalization_and_projective_equality) {
    CVector v(2);
    v << 1.0, 1.0;
    EXPECT_QCS_ERROR(PureState(v), Errc::NotNormalized);
    auto psi = PureState::normalized(v);
    auto phased = PureState(psi.amplitudes() * std::polar(1.0, 1.234));
    EXPECT_TRUE(psi.projectively_equal(phased));
    EXPECT_FALSE(psi.projectively_equal(PureState::basis(2, 0)));
}

TEST(spectral_cdf, three_block_levels) {
    auto m = three_block_model({0.125, 0.25, 0.625});
    auto cdf = spectral_cdf(m.a, m.psi);
    ASSERT_EQ(cdf.size(), 3u);
    EXPECT_EQ(cdf.support(0), -1.0);
    EXPECT_EQ(cdf.support(1), 0.0);
    EXPECT_EQ(cdf.support(2), 1.0);
    EXPECT_EQ(cdf.level(0), 0.625);
    EXPECT_EQ(cdf.level(1), 0.875);
    EXPECT_EQ(cdf.level(2), 1.0);
}

TEST(spectral_cdf, identity_single_step) {
    Rng rng(5);
    auto cdf = spectral_cdf(HermitianOperator::identity(4), random_state(rng, 4));
    ASSERT_EQ(cdf.size(), 1u);
    EXPECT_EQ(cdf.support(0), 1.0);
    EXPECT_EQ(cdf.level(0), 1.0);
}

TEST(spectral_cdf, levels_match_brute_force_subset_projections) {
    Rng rng(7);
    auto a = random_hermitian(rng, 4);
    auto psi = random_state(rng, 4);
    auto cdf = spectral_cdf(a, psi);
    // Oracle: <psi, E_B psi> with E_B built from a fresh eigen decomposition, B = ]-inf, r_k].
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix());
    for (std::size_t k = 0; k < cdf.size(); ++k) {
        CMatrix e = CMatrix::Zero(4, 4);
        for (Eigen::Index i = 0; i < 4; ++i) {
            if (solver.eigenvalues()[i] <= cdf.support(k) + 1e-9) {
                e += solver.eigenvectors().col(i) * solver.eigenvectors().col(i).adjoint();
            }
        }
        EXPECT_NEAR(cdf.level(k), expectation(e, psi.amplitudes()), 1e-12);
    }
}

TEST(spectral_cdf, drops_zero_weight_atoms) {
    auto cdf = spectral_cdf(HermitianOperator(pauli_z()), PureState::basis(2, 0));
    ASSERT_EQ(cdf.size(), 1u);
    EXPECT_EQ(cdf.support(0), 1.0);
}

TEST(spectral_cdf, dimension_mismatch) {
    EXPECT_QCS_ERROR(spectral_cdf(HermitianOperator(pauli_z()), PureState::basis(3, 0)), Errc::DimensionMismatch);
}

TEST(quantile, three_block_values) {
    auto m = three_block_model({0.125, 0.25, 0.625});
    auto cdf = spectral_cdf(m.a, m.psi);
    EXPECT_EQ(quantile(cdf, 0.5), -1.0);
    EXPECT_EQ(quantile(cdf, 0.7), 0.0);
    EXPECT_EQ(quantile(cdf, 0.875), 0.0);
    EXPECT_EQ(quantile(cdf, 0.625), -1.0);
    EXPECT_EQ(quantile(cdf, 0.9), 1.0);
}

TEST(quantile, out_of_domain) {
    StepCDF cdf({{0.0, 0.5}, {1.0, 1.0}});
    EXPECT_QCS_ERROR(quantile(cdf, 0.0), Errc::OutOfDomain);
    EXPECT_QCS_ERROR(quantile(cdf, 1.0), Errc::OutOfDomain);
    EXPECT_QCS_ERROR(quantile(cdf, -0.1), Errc::OutOfDomain);
}

TEST(step_cdf, rejects_bad_steps) {
    EXPECT_QCS_ERROR(StepCDF({{0.0, 0.5}}), Errc::BadSpec);
    EXPECT_QCS_ERROR(StepCDF({{1.0, 0.5}, {0.0, 1.0}}), Errc::BadSpec);
    EXPECT_QCS_ERROR(StepCDF({{0.0, 0.5}, {1.0, 0.5}}), Errc::BadSpec);
}

TEST(step_cdf, evaluation_and_left_limits) {
    StepCDF cdf({{-1.0, 0.25}, {2.0, 1.0}});
    EXPECT_EQ(cdf(-2.0), 0.0);
    EXPECT_EQ(cdf(-1.0), 0.25);
    EXPECT_EQ(cdf.left_limit(-1.0), 0.0);
    EXPECT_EQ(cdf(1.0), 0.25);
    EXPECT_EQ(cdf(2.0), 1.0);
    EXPECT_EQ(cdf.left_limit(2.0), 0.25);
}

TEST(borel_apply, square_of_three_block_operator) {
    auto m = three_block_model({0.125, 0.25, 0.625});
    auto sq = borel_apply(PiecewiseFn::square(), m.a);
    EXPECT_LT(max_abs(sq.matrix() - (m.e + m.g)), 1e-15);
    auto values = sq.eigensystem().eigenvalues();
    EXPECT_EQ(values, (std::vector<double>{0.0, 1.0}));
}

TEST(borel_apply, identity_keeps_operator) {
    Rng rng(9);
    auto a = random_hermitian(rng, 5);
    EXPECT_LT(max_abs(borel_apply(PiecewiseFn::identity(), a).matrix() - a.matrix()), 1e-12);
}

TEST(borel_apply, affine_on_pauli_z) {
    auto a = HermitianOperator(pauli_z());
    auto b = borel_apply(PiecewiseFn::affine(2.0, 1.0), a);
    CMatrix direct = 2.0 * pauli_z() + CMatrix::Identity(2, 2);
    auto oracle = eigensystem(HermitianOperator(direct));
    ASSERT_EQ(b.eigensystem().size(), 2u);
    EXPECT_EQ(b.eigensystem().eigenvalues(), (std::vector<double>{-1.0, 3.0}));
    for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_LT(max_abs(b.eigensystem().atoms()[k].projector - oracle.atoms()[k].projector), 1e-12);
    }
}

TEST(borel_apply, domain_gap) {
    PiecewiseFn partial({0.0, 10.0}, {{1.0}});
    EXPECT_QCS_ERROR(borel_apply(partial, HermitianOperator(pauli_z())), Errc::DomainGap);
}

TEST(moment, three_block_moments) {
    auto m = three_block_model({0.125, 0.25, 0.625});
    // -1 * 5/8 + 0 * 1/4 + 1 * 1/8 and 1 * 5/8 + 1 * 1/8.
    EXPECT_EQ(moment(m.a, m.psi, 1), -0.5);
    EXPECT_EQ(moment(m.a, m.psi, 2), 0.75);
    EXPECT_EQ(moment(m.a, m.psi, 0), 1.0);
}

TEST(spectral_properties, reconstruction_on_random_operators) {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        auto a = random_hermitian(rng, random_dim(rng, 2, 8));
        const auto &es = a.eigensystem();
        EXPECT_LT(max_abs(es.reconstruct() - a.matrix()), 1e-10);
        CMatrix sum = CMatrix::Zero(a.matrix().rows(), a.matrix().cols());
        for (std::size_t j = 0; j < es.size(); ++j) {
            const auto &p = es.atoms()[j].projector;
            sum += p;
            EXPECT_LT(max_abs(p * p - p), 1e-10);
            for (std::size_t k = j + 1; k < es.size(); ++k) {
                EXPECT_LT(max_abs(p * es.atoms()[k].projector), 1e-10);
            }
        }
        EXPECT_LT(max_abs(sum - CMatrix::Identity(sum.rows(), sum.cols())), 1e-10);
    }
}

TEST(spectral_properties, galois_pair) {
    Rng rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        auto cdf = random_step_cdf(rng);
        for (std::size_t k = 0; k < cdf.size(); ++k) {
            double s = cdf.lower_level(k) + u(rng) * cdf.weight(k);
            if (s <= 0.0 || s >= 1.0 || s <= cdf.lower_level(k)) {
                continue;
            }
            EXPECT_EQ(quantile(cdf, s), cdf.support(k));
            EXPECT_GE(cdf(quantile(cdf, s)), s);
            if (cdf.level(k) < 1.0) {
                EXPECT_LE(quantile(cdf, cdf(cdf.support(k))), cdf.support(k));
            }
        }
    }
}

TEST(spectral_properties, functional_calculus_covariance) {
    Rng rng(17);
    const PiecewiseFn fns[] = {PiecewiseFn::square(), PiecewiseFn::absolute(), PiecewiseFn::monomial(3),
                               PiecewiseFn::affine(-1.0, 0.5)};
    for (int t = 0; t < 50; ++t) {
        auto a = random_degenerate_hermitian(rng, random_dim(rng, 2, 8));
        auto psi = random_state(rng, a.dim());
        for (const auto &b : fns) {
            std::map<double, double> expected;
            auto w = spectral_weights(a, psi);
            for (std::size_t k = 0; k < w.size(); ++k) {
                expected[b(a.eigensystem().atoms()[k].value)] += w[k];
            }
            auto image = borel_apply(b, a);
            auto got = spectral_weights(image, psi);
            ASSERT_EQ(got.size(), expected.size());
            std::size_t k = 0;
            for (const auto &[v, p] : expected) {
                EXPECT_NEAR(image.eigensystem().atoms()[k].value, v, 1e-12);
                EXPECT_NEAR(got[k], p, 1e-12);
                ++k;
            }
        }
    }
}
