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

#include "qcs/random_objects.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qcs {

namespace {

CMatrix gaussian_matrix(Rng &rng, std::size_t dim) {
    std::normal_distribution<double> normal;
    const auto n = static_cast<Eigen::Index>(dim);
    CMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    return g;
}

std::vector<Rational> random_partition(Rng &rng, std::size_t parts) {
    const std::int64_t den = 16;
    std::uniform_int_distribution<std::int64_t> cut(1, den - 1);
    std::vector<std::int64_t> cuts;
    while (cuts.size() + 1 < parts) {
        auto c = cut(rng);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) {
            cuts.push_back(c);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> out;
    std::int64_t prev = 0;
    for (auto c : cuts) {
        out.emplace_back(c - prev, den);
        prev = c;
    }
    out.emplace_back(den - prev, den);
    return out;
}

MapSpec random_leaf(Rng &rng, std::size_t max_pieces, bool bijective) {
    std::uniform_int_distribution<int> kind(0, bijective ? 1 : 2);
    switch (kind(rng)) {
        case 0: {
            std::uniform_int_distribution<std::int64_t> num(1, 15);
            return MapSpec::rotation(Rational(num(rng), 16));
        }
        case 1: {
            std::uniform_int_distribution<std::size_t> blocks(1, std::max<std::size_t>(1, max_pieces));
            std::size_t b = blocks(rng);
            std::vector<std::size_t> perm(b);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<bool> flips(b);
            std::bernoulli_distribution flip(0.3);
            for (std::size_t i = 0; i < b; ++i) {
                flips[i] = flip(rng);
            }
            return MapSpec::interval_exchange(random_partition(rng, b), std::move(perm), std::move(flips));
        }
        default: {
            std::uniform_int_distribution<int> k(2, 3);
            return MapSpec::expanding(k(rng));
        }
    }
}

}  // namespace

std::size_t random_dim(Rng &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

HermitianOperator random_hermitian(Rng &rng, std::size_t dim) {
    CMatrix g = gaussian_matrix(rng, dim);
    return HermitianOperator(0.5 * (g + g.adjoint()));
}

HermitianOperator random_degenerate_hermitian(Rng &rng, std::size_t dim) {
    CMatrix u = random_unitary(rng, dim).matrix();
    std::uniform_int_distribution<int> value(-2, 2);
    std::vector<SpectralAtom> atoms;
    std::vector<std::vector<Eigen::Index>> groups(5);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(dim); ++i) {
        groups[static_cast<std::size_t>(value(rng) + 2)].push_back(i);
    }
    for (std::size_t v = 0; v < groups.size(); ++v) {
        if (groups[v].empty()) {
            continue;
        }
        CMatrix cols(u.rows(), static_cast<Eigen::Index>(groups[v].size()));
        for (std::size_t c = 0; c < groups[v].size(); ++c) {
            cols.col(static_cast<Eigen::Index>(c)) = u.col(groups[v][c]);
        }
        atoms.push_back({static_cast<double>(v) - 2.0, cols * cols.adjoint()});
    }
    return HermitianOperator::from_spectrum(EigenSystem(std::move(atoms)));
}

PureState random_state(Rng &rng, std::size_t dim) {
    std::normal_distribution<double> normal;
    CVector v(static_cast<Eigen::Index>(dim));
    for (auto &x : v) {
        x = Complex(normal(rng), normal(rng));
    }
    return PureState::normalized(v);
}

UnitaryOperator random_unitary(Rng &rng, std::size_t dim) {
    Eigen::HouseholderQR<CMatrix> qr(gaussian_matrix(rng, dim));
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < q.cols(); ++i) {
        Complex d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return UnitaryOperator(q);
}

MapSpec random_map_spec(Rng &rng, std::size_t max_pieces, bool bijective) {
    std::bernoulli_distribution composite(0.4);
    for (;;) {
        MapSpec spec = composite(rng)
                           ? MapSpec::composition({random_leaf(rng, 3, bijective), random_leaf(rng, 3, bijective)})
                           : random_leaf(rng, max_pieces, bijective);
        if (build_map(spec).size() <= max_pieces) {
            return spec;
        }
    }
}

StepCDF random_step_cdf(Rng &rng, std::size_t max_atoms) {
    std::uniform_int_distribution<std::size_t> count(1, max_atoms);
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    std::normal_distribution<double> normal;
    std::size_t k = count(rng);
    std::vector<double> supports(k);
    for (auto &s : supports) {
        s = normal(rng);
    }
    std::sort(supports.begin(), supports.end());
    std::vector<double> w(k);
    double total = 0.0;
    for (auto &x : w) {
        x = weight(rng);
        total += x;
    }
    std::vector<Step> steps;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        cumulative += w[i] / total;
        steps.push_back({supports[i], i + 1 == k ? 1.0 : cumulative});
    }
    return StepCDF(std::move(steps));
}

}  // namespace qcs
