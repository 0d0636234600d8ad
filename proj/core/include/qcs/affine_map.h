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

#ifndef QCS_AFFINE_MAP_H
#define QCS_AFFINE_MAP_H

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qcs/interval_set.h"

namespace qcs {

/// Affine piece on the source interval ]lo, hi], stored by its endpoint
/// images: u = lo maps to y_lo, u = hi maps to y_hi. Storing endpoints rather
/// than slope/intercept keeps shared breakpoints bit-identical across pieces.
struct AffinePiece {
    double lo;
    double hi;
    double y_lo;
    double y_hi;

    double slope() const {
        return (y_hi - y_lo) / (hi - lo);
    }
    double intercept() const {
        return y_lo - slope() * lo;
    }
    double operator()(double u) const;
    /// Source point mapped to y (no clamping).
    double inverse(double y) const;
    double image_lo() const {
        return y_lo < y_hi ? y_lo : y_hi;
    }
    double image_hi() const {
        return y_lo < y_hi ? y_hi : y_lo;
    }
    bool increasing() const {
        return y_hi > y_lo;
    }
};

/// Piecewise-affine Borel map ]0,1[ -> [0,1]. Sources partition ]0,1[.
class PiecewiseAffineMap {
   public:
    /// Validates the partition (first lo = 0, last hi = 1, contiguous up to
    /// 1e-12, which is snapped), nonzero slopes and images inside [0,1].
    explicit PiecewiseAffineMap(std::vector<AffinePiece> pieces);

    static PiecewiseAffineMap identity();

    std::span<const AffinePiece> pieces() const {
        return pieces_;
    }
    std::size_t size() const {
        return pieces_.size();
    }
    /// Interior source breakpoints.
    std::vector<double> breakpoints() const;
    /// Distance from u to the nearest interior breakpoint (infinity if none).
    double distance_to_breakpoint(double u) const;

    std::size_t piece_index(double u) const;
    /// Throws Error(OutOfDomain) for u outside ]0,1[.
    double operator()(double u) const;

    /// Exact preimage of ]a, b] as a union of source intervals.
    IntervalSet preimage(Interval target) const;
    IntervalSet preimage(const IntervalSet &target) const;

    /// Merges neighbouring pieces that continue the same affine law.
    PiecewiseAffineMap simplified() const;

    /// Same values off breakpoints, within `tolerance`.
    bool equal_ae(const PiecewiseAffineMap &other, double tolerance = 1e-12) const;

   private:
    std::vector<AffinePiece> pieces_;
};

/// Step function on ]x_0, x_m] with value v_i on ]x_i, x_{i+1}].
class PiecewiseConstantFn {
   public:
    PiecewiseConstantFn(std::vector<double> breakpoints, std::vector<double> values);

    std::span<const double> breakpoints() const {
        return breakpoints_;
    }
    std::span<const double> values() const {
        return values_;
    }
    std::size_t size() const {
        return values_.size();
    }
    Interval piece(std::size_t i) const {
        return {breakpoints_[i], breakpoints_[i + 1]};
    }

    double operator()(double x) const;

    /// Merges neighbouring pieces with equal values.
    PiecewiseConstantFn simplified(double tolerance = 0.0) const;
    /// x -> f(values(x)).
    PiecewiseConstantFn map_values(const std::function<double(double)> &f) const;

    /// Lebesgue pushforward: distinct values (within `tolerance`) with their
    /// total length, sorted by value.
    std::vector<std::pair<double, double>> pushforward(double tolerance = 0.0) const;
    /// Set where the value is within `tolerance` of `value`.
    IntervalSet level_set(double value, double tolerance = 0.0) const;
    double integral() const;

    /// Measure of { x : |f(x) - g(x)| > tolerance } over the common domain.
    double disagreement(const PiecewiseConstantFn &other, double tolerance = 1e-12) const;
    bool equal_ae(const PiecewiseConstantFn &other, double tolerance = 1e-12) const {
        return disagreement(other, tolerance) == 0.0;
    }

   private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

/// Piecewise-constant probability density on ]0,1[ (cells ]lo, hi]).
struct DensityCell {
    double lo;
    double hi;
    double density;
};

class PiecewiseConstantDensity {
   public:
    explicit PiecewiseConstantDensity(std::vector<DensityCell> cells);
    static PiecewiseConstantDensity uniform();

    std::span<const DensityCell> cells() const {
        return cells_;
    }
    double mass() const;
    double density_at(double x) const;

   private:
    std::vector<DensityCell> cells_;
};

/// Exact image density of `d` under `m`: on each image cell the sum over
/// preimage pieces of density / |slope|. Image breakpoints closer than 1e-13
/// are identified.
PiecewiseConstantDensity pushforward_density(const PiecewiseAffineMap &m, const PiecewiseConstantDensity &d);

/// True iff the pushforward of Lebesgue measure is Lebesgue measure, i.e. the
/// image density is 1 (within 1e-12) on all of ]0,1[.
bool verify_measure_preserving(const PiecewiseAffineMap &m);

/// outer o inner. Throws Error(DomainMismatch) if part of the image of
/// `inner` escapes the domain of `outer`.
PiecewiseAffineMap compose(const PiecewiseAffineMap &outer, const PiecewiseAffineMap &inner);

/// Inverse of an a.e. bijective map; throws Error(NotInjective) when images of
/// the pieces overlap or fail to tile ]0,1[.
PiecewiseAffineMap invert(const PiecewiseAffineMap &m);

/// g o m for a step function g defined on ]0,1].
PiecewiseConstantFn compose(const PiecewiseConstantFn &g, const PiecewiseAffineMap &m);

/// u -> u + c mod 1, for 0 <= c < 1.
PiecewiseAffineMap rotation_map(double c);
/// Block i (length lengths[i], in source order) is moved to output slot
/// perm[i]; flips[i] reverses its orientation.
PiecewiseAffineMap interval_exchange_map(std::span<const double> lengths, std::span<const std::size_t> perm,
                                         const std::vector<bool> &flips = {});
/// u -> k u mod 1.
PiecewiseAffineMap expanding_map(int k);

}  // namespace qcs

#endif
