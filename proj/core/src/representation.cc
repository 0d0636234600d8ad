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

#include <algorithm>
#include <cmath>

#include "qcs/error.h"
#include "qcs/factorization.h"
#include "qcs/tolerances.h"

namespace qcs {

namespace {

constexpr double kValueMatch = 1e-9;

std::pair<double, double> spectrum_hull(const HermitianOperator &a) {
    auto values = a.eigensystem().eigenvalues();
    return {values.front(), values.back()};
}

}  // namespace

bool monotone_compose_check(const PiecewiseFn &b, const HermitianOperator &a, const PureState &psi,
                            const PiecewiseAffineMap &alpha) {
    auto [lo, hi] = spectrum_hull(a);
    if (!b.defined_at(lo) || !b.defined_at(hi) || (hi > lo && !b.strictly_increasing_on(lo, hi))) {
        fail(Errc::NotMonotone, "b is not strictly increasing and continuous on the spectrum");
    }
    return composition_disagreement(a, b, psi, alpha, alpha) == 0.0;
}

double composition_disagreement(const HermitianOperator &a, const PiecewiseFn &b, const PureState &psi,
                                const PiecewiseAffineMap &alpha, const PiecewiseAffineMap &beta) {
    auto lhs = value_function(a, psi, alpha).map_values([&b](double x) { return b(x); });
    auto rhs = value_function(borel_apply(b, a), psi, beta);
    return lhs.disagreement(rhs, kValueMatch);
}

std::vector<double> dyadic_amplitudes(double w) {
    if (!(w > 0.0)) {
        return {};
    }
    std::vector<double> out;
    double rest = w;
    int exponent = 0;
    while (rest > 0.0 && exponent < 60) {
        ++exponent;
        double bit = std::ldexp(1.0, -exponent);
        if (rest >= bit) {
            rest -= bit;
            if (exponent % 2 == 0) {
                out.push_back(std::ldexp(1.0, -exponent / 2));
            } else {
                double half = std::ldexp(1.0, -(exponent + 1) / 2);
                out.push_back(half);
                out.push_back(half);
            }
        }
    }
    if (rest > 0.0 || out.size() > 16) {
        return {std::sqrt(w)};
    }
    return out;
}

ThreeBlockModel three_block_model(std::array<double, 3> weights) {
    double total = weights[0] + weights[1] + weights[2];
    if (std::abs(total - 1.0) > tol::kStateNorm || *std::min_element(weights.begin(), weights.end()) < 0.0) {
        fail(Errc::NotNormalized, "block weights must be nonnegative and sum to 1");
    }
    std::array<std::vector<double>, 3> amps;
    std::size_t dim = 0;
    for (int k = 0; k < 3; ++k) {
        amps[k] = dyadic_amplitudes(weights[k]);
        if (amps[k].empty()) {
            amps[k].push_back(0.0);
        }
        dim += amps[k].size();
    }
    const auto n = static_cast<Eigen::Index>(dim);
    std::array<CMatrix, 3> blocks{CMatrix::Zero(n, n), CMatrix::Zero(n, n), CMatrix::Zero(n, n)};
    CVector psi = CVector::Zero(n);
    Eigen::Index row = 0;
    for (int k = 0; k < 3; ++k) {
        for (double amp : amps[k]) {
            blocks[k](row, row) = 1.0;
            psi(row) = amp;
            ++row;
        }
    }
    // E carries value 1, F value 0, G value -1.
    auto a = HermitianOperator::from_spectrum(EigenSystem({{-1.0, blocks[2]}, {0.0, blocks[1]}, {1.0, blocks[0]}}));
    auto a2 = HermitianOperator::from_spectrum(EigenSystem({{0.0, blocks[1]}, {1.0, blocks[0] + blocks[2]}}));
    return {blocks[0], blocks[1], blocks[2], std::move(a), std::move(a2), PureState::normalized(psi)};
}

NoGoWitness no_go_witness(const PiecewiseAffineMap &alpha, std::array<double, 3> weights) {
    auto model = three_block_model(weights);
    auto b = PiecewiseFn::square();
    double d = value_function(model.a, model.psi, alpha)
                   .map_values([](double x) { return x * x; })
                   .disagreement(value_function(model.a_squared, model.psi, alpha), kValueMatch);
    return {std::move(model), std::move(b), d};
}

PiecewiseAffineMap repair_barrier(const HermitianOperator &a, const PiecewiseFn &b, const PiecewiseAffineMap &alpha,
                                  const PureState &psi) {
    auto target = value_function(a, psi, alpha).map_values([&b](double x) { return b(x); });
    return factor_against_cdf(target, spectral_cdf(borel_apply(b, a), psi));
}

SpectrumImage spectrum_image_check(const HermitianOperator &a, const PiecewiseAffineMap &alpha,
                                   std::span<const PureState> probes) {
    SpectrumImage out{false, {}, a.eigensystem().eigenvalues()};
    for (const auto &probe : probes) {
        auto f = value_function(a, probe, alpha);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f.piece(i).length() > 0.0) {
                out.image.push_back(f.values()[i]);
            }
        }
    }
    std::sort(out.image.begin(), out.image.end());
    out.image.erase(std::unique(out.image.begin(), out.image.end()), out.image.end());
    out.closed = out.image == out.spectrum;
    return out;
}

std::vector<PureState> eigenvector_probes(const HermitianOperator &a) {
    std::vector<PureState> out;
    for (const auto &atom : a.eigensystem().atoms()) {
        Eigen::Index best = 0;
        atom.projector.diagonal().real().maxCoeff(&best);
        out.push_back(PureState::normalized(atom.projector.col(best)));
    }
    return out;
}

Identifiability identifiability_check(const HermitianOperator &a1, const HermitianOperator &a2,
                                      const PiecewiseAffineMap &alpha, std::span<const PureState> probes) {
    require_same_dim(a1.dim(), a2.dim(), "identifiability check");
    bool agree = true;
    for (const auto &probe : probes) {
        if (value_function(a1, probe, alpha).disagreement(value_function(a2, probe, alpha), kValueMatch) > 0.0) {
            agree = false;
            break;
        }
    }
    bool equal = (a1.matrix() - a2.matrix()).cwiseAbs().maxCoeff() <= tol::kResolution;
    return {agree, equal, !agree || equal};
}

std::vector<PureState> standard_probes(std::size_t dim) {
    std::vector<PureState> out;
    const auto n = static_cast<Eigen::Index>(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out.push_back(PureState::basis(dim, i));
    }
    const double r = 1.0 / std::sqrt(2.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            CVector v = CVector::Zero(n);
            v(i) = r;
            v(j) = r;
            out.push_back(PureState::normalized(v));
            v(j) = Complex(0.0, r);
            out.push_back(PureState::normalized(v));
        }
    }
    return out;
}

}  // namespace qcs
