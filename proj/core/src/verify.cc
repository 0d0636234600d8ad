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

#include "qcs/verify.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "qcs/algebra.h"
#include "qcs/complete_state.h"
#include "qcs/dynamics.h"
#include "qcs/error.h"
#include "qcs/factorization.h"
#include "qcs/ks.h"
#include "qcs/phase_space.h"
#include "qcs/random_objects.h"
#include "qcs/representation.h"

namespace qcs {

namespace {

class Collector {
   public:
    explicit Collector(std::string suite) : suite_(std::move(suite)) {
    }

    void max_error(std::string name, double err, double bound) {
        std::ostringstream os;
        os << "max error " << err << " (bound " << bound << ")";
        out.push_back({suite_, std::move(name), err < bound, err, os.str()});
    }
    void failures(std::string name, std::size_t bad, std::size_t total, std::size_t allowed = 0) {
        std::ostringstream os;
        os << bad << " of " << total << " cases failed (allowed " << allowed << ")";
        out.push_back({suite_, std::move(name), bad <= allowed, static_cast<double>(bad), os.str()});
    }

    std::vector<CheckResult> out;

   private:
    std::string suite_;
};

PiecewiseAffineMap random_barrier(Rng &rng, bool bijective = false) {
    return build_map(random_map_spec(rng, 6, bijective));
}

double weight_of(const HermitianOperator &a, const PureState &psi, double value) {
    auto weights = spectral_weights(a, psi);
    const auto atoms = a.eigensystem().atoms();
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (atoms[k].value == value) {
            return weights[k];
        }
    }
    return 0.0;
}

std::vector<CheckResult> spectral_suite(Rng &rng) {
    Collector c("spectral");
    double recon = 0.0;
    double proj = 0.0;
    for (int t = 0; t < 200; ++t) {
        auto a = t % 4 == 3 ? random_degenerate_hermitian(rng, random_dim(rng, 2, 8))
                            : random_hermitian(rng, random_dim(rng, 2, 8));
        const auto &es = a.eigensystem();
        recon = std::max(recon, (es.reconstruct() - a.matrix()).cwiseAbs().maxCoeff());
        for (std::size_t j = 0; j < es.size(); ++j) {
            const auto &pj = es.atoms()[j].projector;
            proj = std::max(proj, (pj * pj - pj).cwiseAbs().maxCoeff());
            for (std::size_t k = j + 1; k < es.size(); ++k) {
                proj = std::max(proj, (pj * es.atoms()[k].projector).cwiseAbs().maxCoeff());
            }
        }
    }
    c.max_error("reconstruction", recon, 1e-10);
    c.max_error("projector algebra", proj, 1e-10);

    std::size_t galois_bad = 0;
    std::size_t galois_total = 0;
    double push = 0.0;
    for (int t = 0; t < 200; ++t) {
        auto cdf = random_step_cdf(rng);
        std::uniform_real_distribution<double> frac(0.0, 1.0);
        for (std::size_t k = 0; k < cdf.size(); ++k) {
            double s = cdf.lower_level(k) + std::max(frac(rng), 1e-9) * cdf.weight(k);
            ++galois_total;
            if (!(cdf(quantile(cdf, std::min(s, cdf.level(k)))) >= std::min(s, cdf.level(k)))) {
                ++galois_bad;
            }
            if (cdf.level(k) < 1.0 && !(quantile(cdf, cdf(cdf.support(k))) <= cdf.support(k))) {
                ++galois_bad;
            }
        }
        auto pf = quantile_function(cdf).pushforward();
        for (std::size_t k = 0; k < cdf.size(); ++k) {
            push = std::max(push, std::abs(pf[k].second - cdf.weight(k)));
        }
    }
    c.failures("quantile galois pair", galois_bad, galois_total);
    c.max_error("quantile pushforward", push, 1e-15);

    const PiecewiseFn fns[] = {PiecewiseFn::square(), PiecewiseFn::absolute(), PiecewiseFn::affine(2.0, 1.0),
                               PiecewiseFn::monomial(3), PiecewiseFn::indicator(-0.5, 0.5)};
    double cov = 0.0;
    for (int t = 0; t < 100; ++t) {
        auto a = t % 2 ? random_degenerate_hermitian(rng, random_dim(rng, 2, 8))
                       : random_hermitian(rng, random_dim(rng, 2, 8));
        auto psi = random_state(rng, a.dim());
        for (const auto &b : fns) {
            auto image = borel_apply(b, a);
            std::map<double, double> expected;
            const auto atoms = a.eigensystem().atoms();
            auto w = spectral_weights(a, psi);
            for (std::size_t k = 0; k < atoms.size(); ++k) {
                expected[b(atoms[k].value)] += w[k];
            }
            auto got = spectral_weights(image, psi);
            const auto img_atoms = image.eigensystem().atoms();
            for (std::size_t k = 0; k < img_atoms.size(); ++k) {
                double e = 0.0;
                for (const auto &[v, p] : expected) {
                    if (std::abs(v - img_atoms[k].value) <= 1e-12 * std::max(1.0, std::abs(v))) {
                        e += p;
                    }
                }
                cov = std::max(cov, std::abs(e - got[k]));
            }
        }
    }
    c.max_error("functional calculus covariance", cov, 1e-12);
    return c.out;
}

std::vector<CheckResult> measure_suite(Rng &rng) {
    Collector c("measure");
    double mass = 0.0;
    std::size_t not_preserving = 0;
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> len(1, 6);
        auto m = PiecewiseAffineMap::identity();
        int count = len(rng);
        for (int i = 0; i < count; ++i) {
            m = compose(random_barrier(rng), m);
        }
        auto d = pushforward_density(m, PiecewiseConstantDensity::uniform());
        mass = std::max(mass, std::abs(d.mass() - 1.0));
        not_preserving += verify_measure_preserving(m) ? 0 : 1;
    }
    c.max_error("pushforward mass", mass, 1e-12);
    c.failures("composition closure", not_preserving, 100);

    std::size_t inverse_bad = 0;
    for (int t = 0; t < 100; ++t) {
        auto m = random_barrier(rng, true);
        auto inv = invert(m);
        bool ok = verify_measure_preserving(inv) && compose(inv, m).equal_ae(PiecewiseAffineMap::identity(), 1e-9) &&
                  compose(m, inv).equal_ae(PiecewiseAffineMap::identity(), 1e-9);
        inverse_bad += ok ? 0 : 1;
    }
    c.failures("inversion closure", inverse_bad, 100);

    std::size_t factor_bad = 0;
    std::size_t remark_bad = 0;
    for (int t = 0; t < 100; ++t) {
        auto cdf = random_step_cdf(rng);
        auto alpha = random_barrier(rng);
        auto f = compose(quantile_function(cdf), alpha);
        auto recovered = factor_against_cdf(f, cdf);
        if (!verify_measure_preserving(recovered) || !compose(quantile_function(cdf), recovered).equal_ae(f)) {
            ++factor_bad;
        }
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 20; ++i) {
            double z = u(rng);
            if (recovered.distance_to_breakpoint(z) < 1e-9) {
                continue;
            }
            double r = quantile(cdf, std::clamp(recovered(z), 1e-300, 1.0 - 1e-16));
            double s = recovered(z);
            if (!(cdf.left_limit(r) <= s + 1e-12 && s <= cdf(r) + 1e-12)) {
                ++remark_bad;
            }
        }
    }
    c.failures("factorization soundness", factor_bad, 100);
    c.failures("level bracket at atoms", remark_bad, 2000);
    return c.out;
}

std::vector<CheckResult> states_suite(Rng &rng, std::uint64_t seed) {
    Collector c("states");
    double born = 0.0;
    std::size_t moment_bad = 0;
    double moment_err = 0.0;
    std::size_t null_bad = 0;
    std::size_t recovery_bad = 0;
    const PiecewiseFn moments[] = {PiecewiseFn::constant(1.0), PiecewiseFn::identity(), PiecewiseFn::square(),
                                   PiecewiseFn::monomial(3), PiecewiseFn::absolute()};
    for (int t = 0; t < 300; ++t) {
        auto a = t % 3 == 2 ? random_degenerate_hermitian(rng, random_dim(rng, 2, 8))
                            : random_hermitian(rng, random_dim(rng, 2, 8));
        auto psi = random_state(rng, a.dim());
        auto alpha = random_barrier(rng);
        for (const auto &[v, p] : value_distribution(a, psi, alpha)) {
            born = std::max(born, std::abs(p - weight_of(a, psi, v)));
        }
        for (const auto &b : moments) {
            double lhs = expectation_via_labels(b, a, psi, alpha);
            double rhs = expectation(borel_apply(b, a).matrix(), psi.amplitudes());
            double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
            moment_err = std::max(moment_err, err);
            moment_bad += err < 1e-10 ? 0 : 1;
        }
        // Null intervals: the preimage is empty exactly when no atom lies in ]lo, hi].
        auto cdf = spectral_cdf(a, psi);
        std::normal_distribution<double> normal(0.0, 2.0);
        for (int i = 0; i < 5; ++i) {
            double x = normal(rng);
            double y = normal(rng);
            Interval iv{std::min(x, y), std::max(x, y)};
            bool has_atom = false;
            for (const auto &st : cdf.steps()) {
                has_atom = has_atom || (st.support > iv.lo && st.support <= iv.hi);
            }
            auto pre = value_preimage(a, psi, alpha, iv);
            if (has_atom == pre.empty() || (pre.measure() == 0.0) != pre.empty()) {
                ++null_bad;
            }
        }
        auto f = value_function(a, psi, alpha);
        auto beta = factor_against_cdf(f, cdf);
        if (!value_function(a, psi, beta).equal_ae(f)) {
            ++recovery_bad;
        }
    }
    c.max_error("born exactness", born, 1e-12);
    c.failures("moment identity", moment_bad, 1500);
    c.failures("null interval lemma", null_bad, 1500);
    c.failures("barrier recovery", recovery_bad, 300);

    auto model = three_block_model({0.125, 0.25, 0.625});
    std::size_t ks_fail = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto samples = sample_values(model.a, model.psi, PiecewiseAffineMap::identity(), seed * 1000 + s, 10000);
        if (ks_statistic(samples, spectral_cdf(model.a, model.psi)) >= ks_threshold(samples.size())) {
            ++ks_fail;
        }
    }
    c.failures("sampling consistency", ks_fail, 100, 2);

    double base = no_go_witness(PiecewiseAffineMap::identity()).disagreement;
    double drift = std::abs(base - 0.5);
    for (int t = 0; t < 50; ++t) {
        drift = std::max(drift, std::abs(no_go_witness(random_barrier(rng)).disagreement - base));
    }
    c.max_error("no-go invariance", drift, 1e-12);
    return c.out;
}

std::vector<CheckResult> dynamics_suite(Rng &rng) {
    Collector c("dynamics");
    double grad = 0.0;
    for (int t = 0; t < 50; ++t) {
        auto a = random_hermitian(rng, random_dim(rng, 2, 8));
        grad = std::max(grad, gradient_check(ObservableFunction(a), random_state(rng, a.dim())));
    }
    c.max_error("gradient identity", grad, 1e-6);

    double alg = 0.0;
    double qform = 0.0;
    for (int t = 0; t < 100; ++t) {
        std::size_t d = random_dim(rng, 2, 6);
        auto a = random_hermitian(rng, d).matrix();
        auto b = random_hermitian(rng, d).matrix();
        auto e = random_hermitian(rng, d).matrix();
        const Complex i(0.0, 1.0);
        alg = std::max(alg, (a * b - jordan_product(a, b) - i * lie_bracket(a, b)).cwiseAbs().maxCoeff());
        CMatrix jac = lie_bracket(a, lie_bracket(b, e)) + lie_bracket(b, lie_bracket(e, a)) +
                      lie_bracket(e, lie_bracket(a, b));
        alg = std::max(alg, jac.cwiseAbs().maxCoeff());
        CMatrix a2 = a * a;
        alg = std::max(alg, (jordan_product(jordan_product(a, b), a2) - jordan_product(a, jordan_product(b, a2)))
                                .cwiseAbs()
                                .maxCoeff() /
                                std::max(1.0, a2.cwiseAbs().maxCoeff() * b.cwiseAbs().maxCoeff()));

        ObservableFunction f{HermitianOperator(a)};
        ObservableFunction g{HermitianOperator(b)};
        CVector psi = random_state(rng, d).amplitudes() * 1.7;
        Complex pairing = 0.25 * (2.0 * (a * psi)).dot(2.0 * (b * psi));
        auto prod = star(f, g);
        qform = std::max(qform, std::abs(pairing.real() - quadratic_form(prod.re, psi)));
        qform = std::max(qform, std::abs(pairing.imag() - quadratic_form(prod.im, psi)));
    }
    c.max_error("product identities", alg, 1e-12);
    c.max_error("quadratic form pairing", qform, 1e-10);

    std::size_t heis_bad = 0;
    for (int t = 0; t < 1000; ++t) {
        std::size_t d = random_dim(rng, 2, 6);
        ObservableFunction f{random_hermitian(rng, d)};
        ObservableFunction g{random_hermitian(rng, d)};
        heis_bad += heisenberg_check(f, g, random_state(rng, d)).holds ? 0 : 1;
    }
    c.failures("heisenberg inequality", heis_bad, 1000);

    std::size_t lift_bad = 0;
    std::size_t kernel_bad = 0;
    double group = 0.0;
    for (int t = 0; t < 30; ++t) {
        std::size_t d = random_dim(rng, 2, 5);
        EquivalenceComplex sigma(rule::PopulationRotation{0});
        auto u = random_unitary(rng, d);
        auto v = random_unitary(rng, d);
        auto psi = random_state(rng, d);
        auto alpha = random_barrier(rng);
        auto labels = uniform_labels(rng(), 20);
        for (double z : labels) {
            if (alpha.distance_to_breakpoint(z) < 1e-9) {
                continue;
            }
            CompleteState cs(psi, alpha, z);
            try {
                if (!same_complete_state(lift_unitary(u * v, sigma, cs), lift_unitary(u, sigma, lift_unitary(v, sigma, cs)))) {
                    ++lift_bad;
                }
                auto phased = UnitaryOperator(u.matrix() * std::polar(1.0, 0.7));
                if (!same_complete_state(lift_unitary(u, sigma, cs), lift_unitary(phased, sigma, cs))) {
                    ++kernel_bad;
                }
                if (same_complete_state(lift_unitary(u, sigma, cs), lift_unitary(v, sigma, cs)) &&
                    !lift_unitary(u, sigma, cs).state().projectively_equal(lift_unitary(v, sigma, cs).state())) {
                    ++kernel_bad;
                }
            } catch (const Error &e) {
                if (e.code() != Errc::LabelOnBreakpoint) {
                    throw;
                }
            }
        }
        auto h = random_hermitian(rng, d);
        auto s1 = evolve(h, 0.3, evolve(h, 0.45, psi));
        auto s2 = evolve(h, 0.75, psi);
        group = std::max(group, (s1.amplitudes() - s2.amplitudes()).cwiseAbs().maxCoeff());
    }
    c.failures("lift homomorphism", lift_bad, 600);
    c.failures("projective kernel", kernel_bad, 600);
    c.max_error("evolution group law", group, 1e-10);

    std::size_t distinct = 0;
    for (int t = 0; t < 20; ++t) {
        auto u = random_unitary(rng, 3);
        auto v = random_unitary(rng, 3);
        auto psi = random_state(rng, 3);
        distinct += u.apply(psi).projectively_equal(v.apply(psi)) ? 0 : 1;
    }
    c.failures("distinct unitaries separate states", 20 - distinct, 20);
    return c.out;
}

std::vector<CheckResult> phase_suite(Rng &rng) {
    Collector c("phase");
    PhaseSpaceGrid grid{64, 0.1};
    const Rational half(1, 2);
    std::normal_distribution<double> normal;
    CVector coeffs(static_cast<Eigen::Index>(2 * grid.n));
    for (auto &x : coeffs) {
        x = Complex(normal(rng), normal(rng));
    }
    auto psi = PhaseSpaceState::from_coefficients(half, grid, coeffs / coeffs.norm());
    auto mu = build_measure(psi);
    auto id = PiecewiseFn::identity();
    double qmps = 0.0;
    bool realized = true;
    for (auto [a, obs] : {std::pair{position_operator(id, psi), position_observable(id, mu)},
                          std::pair{momentum_operator(id, psi), momentum_observable(id, mu)},
                          std::pair{spin_operator(psi), spin_observable(mu)}}) {
        auto r = qmps_check(a, obs, psi, mu);
        qmps = std::max(qmps, r.gap);
        realized = realized && r.barrier_preserves_measure;
    }
    c.max_error("qmps identity", qmps, 1e-12);
    c.failures("qmps barrier realization", realized ? 0 : 1, 1);

    auto qm = mu.position_marginal();
    auto pm = mu.momentum_marginal();
    CVector a = psi.coefficients();
    CVector b = psi.momentum_coefficients();
    double marg = 0.0;
    for (std::size_t j = 0; j < grid.n; ++j) {
        double q_expected = 0.0;
        double p_expected = 0.0;
        for (std::size_t s = 0; s < psi.sector_count(); ++s) {
            auto idx = static_cast<Eigen::Index>(s * grid.n + j);
            q_expected += std::norm(a[idx]);
            p_expected += std::norm(b[idx]);
        }
        marg = std::max({marg, std::abs(qm[j] - q_expected), std::abs(pm[j] - p_expected)});
    }
    c.max_error("marginal exactness", marg, 1e-12);

    double tv = shared_barrier_obstruction(id, id, build_measure(gaussian_state(half, grid, 0.5, 0.0)));
    std::ostringstream os;
    os << "total variation " << tv;
    c.out.push_back({"phase", "shared barrier obstruction", tv > 1e-3, tv, os.str()});
    return c.out;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"spectral", "measure", "states", "dynamics", "phase"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed) {
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const auto &name : suite_names()) {
            auto part = run_suite(name, seed);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    Rng rng(seed);
    if (suite == "spectral") {
        return spectral_suite(rng);
    }
    if (suite == "measure") {
        return measure_suite(rng);
    }
    if (suite == "states") {
        return states_suite(rng, seed);
    }
    if (suite == "dynamics") {
        return dynamics_suite(rng);
    }
    if (suite == "phase") {
        return phase_suite(rng);
    }
    fail(Errc::SchemaError, "unknown suite '" + std::string(suite) + "'");
}

bool all_passed(const std::vector<CheckResult> &results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
}

}  // namespace qcs
