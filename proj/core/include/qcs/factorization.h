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

#ifndef QCS_FACTORIZATION_H
#define QCS_FACTORIZATION_H

#include "qcs/affine_map.h"
#include "qcs/spectral.h"

namespace qcs {

/// The quantile function of `cdf` as a step function on ]0,1]:
/// value support_k on ]c_{k-1}, c_k].
PiecewiseConstantFn quantile_function(const StepCDF &cdf);

/// Given a step function f on ]0,1[ whose Lebesgue pushforward is the law of
/// `cdf`, builds a measure-preserving map alpha with quantile(cdf, .) o alpha
/// = f off finitely many points.
///
/// For each atom r_k the pieces where f = r_k are sent, in source order and
/// order-preservingly, onto consecutive subintervals of ]c_{k-1}, c_k] with
/// the common slope w_k / (total length of those pieces).
///
/// Throws Error(ValueNotInSupport) if f takes a value that is not a support
/// point, Error(DistributionMismatch) if some atom weight differs from its
/// preimage length by more than 1e-12.
PiecewiseAffineMap factor_against_cdf(const PiecewiseConstantFn &f, const StepCDF &cdf);

}  // namespace qcs

#endif
