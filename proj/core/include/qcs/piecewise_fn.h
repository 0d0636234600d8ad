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

#ifndef QCS_PIECEWISE_FN_H
#define QCS_PIECEWISE_FN_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace qcs {

/// A bounded-on-bounded-sets Borel function represented as a piecewise
/// polynomial. Piece `i` covers the left-open right-closed interval
/// ]breakpoints[i], breakpoints[i+1]] and is sum_j coeffs[i][j] * x^j.
/// The outermost breakpoints may be -inf / +inf.
class PiecewiseFn {
   public:
    PiecewiseFn(std::vector<double> breakpoints, std::vector<std::vector<double>> coefficients);

    static PiecewiseFn polynomial(std::vector<double> coefficients);
    static PiecewiseFn identity();
    static PiecewiseFn constant(double c);
    static PiecewiseFn affine(double slope, double intercept);
    static PiecewiseFn monomial(unsigned power);
    static PiecewiseFn square();
    static PiecewiseFn absolute();
    /// 1 on ]lo, hi], 0 elsewhere.
    static PiecewiseFn indicator(double lo, double hi);

    /// Throws Error(DomainGap) when x lies in no piece.
    double operator()(double x) const;
    std::optional<std::size_t> piece_index(double x) const;
    bool defined_at(double x) const {
        return piece_index(x).has_value();
    }

    std::size_t piece_count() const {
        return coefficients_.size();
    }
    std::span<const double> breakpoints() const {
        return breakpoints_;
    }
    std::span<const double> coefficients(std::size_t piece) const {
        return coefficients_[piece];
    }

    /// Grid check that the function is continuous and strictly increasing on
    /// [lo, hi]: 256 sub-steps per piece overlap plus continuity at the
    /// interior breakpoints.
    bool strictly_increasing_on(double lo, double hi) const;

   private:
    double eval_piece(std::size_t piece, double x) const;

    std::vector<double> breakpoints_;
    std::vector<std::vector<double>> coefficients_;
};

}  // namespace qcs

#endif
