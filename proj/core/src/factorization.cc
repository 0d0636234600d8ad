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

#include "qcs/factorization.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcs/error.h"
#include "qcs/tolerances.h"

namespace qcs {

PiecewiseConstantFn quantile_function(const StepCDF &cdf) {
    std::vector<double> breakpoints{0.0};
    std::vector<double> values;
    for (const auto &step : cdf.steps()) {
        breakpoints.push_back(step.level);
        values.push_back(step.support);
    }
    return PiecewiseConstantFn(std::move(breakpoints), std::move(values));
}

namespace {

std::size_t support_index(const StepCDF &cdf, double value) {
    const auto steps = cdf.steps();
    auto it = std::lower_bound(steps.begin(), steps.end(), value,
                               [](const Step &s, double v) { return s.support < v; });
    auto matches = [&](std::size_t k) {
        double r = steps[k].support;
        return std::abs(r - value) <= 1e-9 * std::max(1.0, std::abs(r));
    };
    std::size_t k = static_cast<std::size_t>(it - steps.begin());
    if (k < steps.size() && matches(k)) {
        return k;
    }
    if (k > 0 && matches(k - 1)) {
        return k - 1;
    }
    fail(Errc::ValueNotInSupport, "value " + std::to_string(value) + " is not a support point");
}

}  // namespace

PiecewiseAffineMap factor_against_cdf(const PiecewiseConstantFn &f, const StepCDF &cdf) {
    const auto bp = f.breakpoints();
    if (std::abs(bp.front()) > tol::kMapEndpoint || std::abs(bp.back() - 1.0) > tol::kMapEndpoint) {
        fail(Errc::DistributionMismatch, "step function must be defined on ]0,1[");
    }
    std::vector<std::size_t> atom_of(f.size());
    std::vector<double> source_length(cdf.size(), 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        atom_of[i] = support_index(cdf, f.values()[i]);
        source_length[atom_of[i]] += bp[i + 1] - bp[i];
    }
    for (std::size_t k = 0; k < cdf.size(); ++k) {
        if (std::abs(source_length[k] - cdf.weight(k)) > tol::kAtomWeight) {
            fail(Errc::DistributionMismatch, "atom " + std::to_string(cdf.support(k)) + " has weight " +
                                                 std::to_string(cdf.weight(k)) + " but preimage length " +
                                                 std::to_string(source_length[k]));
        }
    }
    std::vector<std::size_t> last_piece(cdf.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        last_piece[atom_of[i]] = i;
    }
    std::vector<double> cursor(cdf.size());
    std::vector<double> consumed(cdf.size(), 0.0);
    for (std::size_t k = 0; k < cdf.size(); ++k) {
        cursor[k] = cdf.lower_level(k);
    }
    std::vector<AffinePiece> pieces;
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::size_t k = atom_of[i];
        double len = bp[i + 1] - bp[i];
        consumed[k] += len;
        double y0 = cursor[k];
        double y1 = i == last_piece[k] ? cdf.level(k)
                                       : cdf.lower_level(k) + cdf.weight(k) * (consumed[k] / source_length[k]);
        cursor[k] = y1;
        if (y1 == y0) {
            // the piece is shorter than the resolution of the level grid;
            // fold it into its left neighbour
            if (!pieces.empty()) {
                pieces.back().hi = bp[i + 1];
                continue;
            }
            fail(Errc::DistributionMismatch, "degenerate leading piece");
        }
        pieces.push_back({bp[i], bp[i + 1], y0, y1});
    }
    return PiecewiseAffineMap(std::move(pieces));
}

}  // namespace qcs
