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

#ifndef QCS_TOLERANCES_H
#define QCS_TOLERANCES_H

namespace qcs::tol {

// Operator and state validation.
inline constexpr double kHermitian = 1e-12;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kStateNorm = 1e-12;
inline constexpr double kProjective = 1e-10;
inline constexpr double kResolution = 1e-10;

// Spectral decomposition.
inline constexpr double kEigenMerge = 1e-12;
inline constexpr double kZeroWeight = 1e-14;

// Interval algebra on ]0,1[. Points closer than kBreakpoint are one point.
inline constexpr double kBreakpoint = 1e-13;
inline constexpr double kDensity = 1e-12;
inline constexpr double kEndpointRounding = 1e-15;
inline constexpr double kMapEndpoint = 1e-12;
inline constexpr double kLabelBreakpoint = 1e-15;

// Distribution equality in the factorization construction.
inline constexpr double kAtomWeight = 1e-12;

}  // namespace qcs::tol

#endif
