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

#ifndef QCS_KS_H
#define QCS_KS_H

#include <cstddef>
#include <span>

#include "qcs/spectral.h"

namespace qcs {

// Asymptotic Kolmogorov quantile at the 99% level.
inline constexpr double kKolmogorov99 = 1.63;

// sup |F_n - F| over the support points and the sample values, both sides of every jump.
double ks_statistic(std::span<const double> samples, const StepCDF &cdf);

double ks_threshold(std::size_t n, double c = kKolmogorov99);

}  // namespace qcs

#endif
