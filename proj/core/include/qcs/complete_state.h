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

#ifndef QCS_COMPLETE_STATE_H
#define QCS_COMPLETE_STATE_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcs/affine_map.h"
#include "qcs/map_spec.h"
#include "qcs/piecewise_fn.h"
#include "qcs/spectral.h"

namespace qcs {

/// ([psi], alpha, z): a pure state, a measure-preserving barrier on the label
/// space ]0,1[ and a label. Every observable has exactly one value here.
class CompleteState {
   public:
    /// Throws Error(NotABarrier) if the barrier is not measure-preserving,
    /// Error(OutOfDomain) if z is outside ]0,1[ and Error(LabelOnBreakpoint)
    /// if z is within 1e-15 of a barrier breakpoint.
    CompleteState(PureState state, PiecewiseAffineMap barrier, double label);

    const PureState &state() const {
        return state_;
    }
    const PiecewiseAffineMap &barrier() const {
        return barrier_;
    }
    double label() const {
        return label_;
    }
    /// alpha(z), clamped into ]0,1[.
    double level() const;

   private:
    PureState state_;
    PiecewiseAffineMap barrier_;
    double label_;
};

/// A family of barriers indexed by (operator tag, state tag). Lookup order:
/// exact pair, (operator, "*"), ("*", state), then the default.
class BarrierComplex {
   public:
    BarrierComplex();
    explicit BarrierComplex(MapSpec default_spec);

    /// Throws Error(NotABarrier) if the map is not measure-preserving.
    BarrierComplex &set_override(std::string operator_tag, std::string state_tag, MapSpec spec);

    const PiecewiseAffineMap &barrier(std::string_view operator_tag, std::string_view state_tag) const;
    const MapSpec &default_spec() const {
        return default_spec_;
    }

   private:
    MapSpec default_spec_;
    PiecewiseAffineMap default_map_;
    std::map<std::pair<std::string, std::string>, std::pair<MapSpec, PiecewiseAffineMap>> overrides_;
};

std::shared_ptr<const BarrierComplex> identity_complex();

/// The function ([psi], z) -> quantile(F_psi^A, alpha^A_[psi](z)) for a fixed
/// operator and barrier complex; `op()` is the associated operator.
class ObservableFunction {
   public:
    explicit ObservableFunction(HermitianOperator op, std::string tag = "",
                                std::shared_ptr<const BarrierComplex> complex = identity_complex());

    const HermitianOperator &op() const {
        return op_;
    }
    const std::string &tag() const {
        return tag_;
    }
    const std::shared_ptr<const BarrierComplex> &complex() const {
        return complex_;
    }
    const PiecewiseAffineMap &barrier(std::string_view state_tag = "") const;

    double operator()(const PureState &psi, double z, std::string_view state_tag = "") const;
    /// f_[psi] as a step function of the label.
    PiecewiseConstantFn on(const PureState &psi, std::string_view state_tag = "") const;
    /// Label-side integral of f_[psi]^power against Lebesgue measure.
    double mean(const PureState &psi, unsigned power = 1, std::string_view state_tag = "") const;

   private:
    HermitianOperator op_;
    std::string tag_;
    std::shared_ptr<const BarrierComplex> complex_;
};

/// quantile(F_psi^A, alpha(z)); always an eigenvalue of A.
double value(const HermitianOperator &a, const CompleteState &c);

/// z -> value(A, ([psi], alpha, z)) as an exact step function.
PiecewiseConstantFn value_function(const HermitianOperator &a, const PureState &psi, const PiecewiseAffineMap &alpha);

struct ValueProbability {
    double value;
    double probability;
};

/// Lebesgue measure of alpha^{-1}(]c_{k-1}, c_k]) for every atom of
/// F_psi^A, computed by interval algebra. Throws Error(NotABarrier).
std::vector<ValueProbability> value_distribution(const HermitianOperator &a, const PureState &psi,
                                                 const PiecewiseAffineMap &alpha);

/// Labels whose value falls in ]lo, hi].
IntervalSet value_preimage(const HermitianOperator &a, const PureState &psi, const PiecewiseAffineMap &alpha,
                           Interval values);

/// n values at labels z_i drawn from CounterRng(seed) counter i (redrawn on
/// a new stream while within 1e-15 of a barrier breakpoint). The output does
/// not depend on `workers`.
std::vector<double> sample_values(const HermitianOperator &a, const PureState &psi, const PiecewiseAffineMap &alpha,
                                  std::uint64_t seed, std::size_t n, unsigned workers = 1);

struct SigmaSimpleRegions {
    /// L_k = { z : C_{k-1} < alpha(z) <= C_k } with C_k = sum_{j<=k} <E_j>_psi.
    std::vector<IntervalSet> regions;
    /// Residual { z : alpha(z) > C_n }; empty unless the resolution is truncated.
    IntervalSet tail;
};

/// Label partition for the operator sum_k values[k] E_k. Requires pairwise
/// orthogonal projectors and strictly increasing values; they must sum to
/// the identity unless `truncated` is set. Throws Error(NotAResolution).
SigmaSimpleRegions sigma_simple_regions(std::span<const CMatrix> projectors, std::span<const double> values,
                                        const PureState &psi, const PiecewiseAffineMap &alpha,
                                        bool truncated = false);

/// Value at label z: values[k] on L_k, 0 on the tail.
double sigma_simple_value(const SigmaSimpleRegions &regions, std::span<const double> values, double z);

/// sum_k b(lambda_k) * |alpha^{-1}(level interval k)|.
double expectation_via_labels(const PiecewiseFn &b, const HermitianOperator &a, const PureState &psi,
                              const PiecewiseAffineMap &alpha);

}  // namespace qcs

#endif
