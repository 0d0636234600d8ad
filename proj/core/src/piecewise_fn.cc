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

#include "qcs/piecewise_fn.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcs/error.h"

namespace qcs {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PiecewiseFn::PiecewiseFn(std::vector<double> breakpoints, std::vector<std::vector<double>> coefficients)
    : breakpoints_(std::move(breakpoints)), coefficients_(std::move(coefficients)) {
    if (breakpoints_.size() < 2 || breakpoints_.size() != coefficients_.size() + 1) {
        fail(Errc::BadSpec, "piecewise function needs n+1 breakpoints for n pieces");
    }
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (std::isnan(breakpoints_[i]) || !(breakpoints_[i] < breakpoints_[i + 1])) {
            fail(Errc::BadSpec, "piecewise function breakpoints must be strictly ascending");
        }
    }
    for (auto &c : coefficients_) {
        if (c.empty()) {
            c.push_back(0.0);
        }
    }
}

PiecewiseFn PiecewiseFn::polynomial(std::vector<double> coefficients) {
    return PiecewiseFn({-kInf, kInf}, {std::move(coefficients)});
}

PiecewiseFn PiecewiseFn::identity() {
    return polynomial({0.0, 1.0});
}

PiecewiseFn PiecewiseFn::constant(double c) {
    return polynomial({c});
}

PiecewiseFn PiecewiseFn::affine(double slope, double intercept) {
    return polynomial({intercept, slope});
}

PiecewiseFn PiecewiseFn::monomial(unsigned power) {
    std::vector<double> c(power + 1, 0.0);
    c[power] = 1.0;
    return polynomial(std::move(c));
}

PiecewiseFn PiecewiseFn::square() {
    return monomial(2);
}

PiecewiseFn PiecewiseFn::absolute() {
    return PiecewiseFn({-kInf, 0.0, kInf}, {{0.0, -1.0}, {0.0, 1.0}});
}

PiecewiseFn PiecewiseFn::indicator(double lo, double hi) {
    return PiecewiseFn({-kInf, lo, hi, kInf}, {{0.0}, {1.0}, {0.0}});
}

std::optional<std::size_t> PiecewiseFn::piece_index(double x) const {
    if (std::isnan(x) || !(x > breakpoints_.front()) || x > breakpoints_.back()) {
        return std::nullopt;
    }
    auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), x);
    return static_cast<std::size_t>(it - (breakpoints_.begin() + 1));
}

double PiecewiseFn::eval_piece(std::size_t piece, double x) const {
    const auto &c = coefficients_[piece];
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double PiecewiseFn::operator()(double x) const {
    auto piece = piece_index(x);
    if (!piece) {
        fail(Errc::DomainGap, "point " + std::to_string(x) + " lies in no piece");
    }
    return eval_piece(*piece, x);
}

bool PiecewiseFn::strictly_increasing_on(double lo, double hi) const {
    if (!defined_at(lo) || !defined_at(hi)) {
        return false;
    }
    if (lo == hi) {
        return true;
    }
    constexpr int kSteps = 256;
    double previous = (*this)(lo);
    for (std::size_t i = 0; i < piece_count(); ++i) {
        double a = std::max(lo, breakpoints_[i]);
        double b = std::min(hi, breakpoints_[i + 1]);
        if (!(a < b)) {
            continue;
        }
        // Right limit at the left end of this piece must match the value
        // carried over from the previous piece.
        double right_limit = eval_piece(i, a);
        if (std::abs(right_limit - previous) > 1e-12 * std::max(1.0, std::abs(previous))) {
            return false;
        }
        for (int k = 1; k <= kSteps; ++k) {
            double x = a + (b - a) * k / kSteps;
            double y = eval_piece(i, x);
            if (!(y > previous)) {
                return false;
            }
            previous = y;
        }
    }
    return true;
}

}  // namespace qcs
