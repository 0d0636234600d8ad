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

#include "qcs/ks.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qcs/error.h"

namespace qcs {

double ks_statistic(std::span<const double> samples, const StepCDF &cdf) {
    if (samples.empty()) {
        fail(Errc::EmptySample, "KS statistic needs at least one sample");
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    auto empirical = [&](double r) {
        return static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), r) - sorted.begin()) / n;
    };
    auto empirical_left = [&](double r) {
        return static_cast<double>(std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin()) / n;
    };
    std::vector<double> points = cdf.supports();
    points.insert(points.end(), sorted.begin(), sorted.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    double d = 0.0;
    for (double r : points) {
        d = std::max(d, std::abs(empirical(r) - cdf(r)));
        d = std::max(d, std::abs(empirical_left(r) - cdf.left_limit(r)));
    }
    return d;
}

double ks_threshold(std::size_t n, double c) {
    return c / std::sqrt(static_cast<double>(n));
}

}  // namespace qcs
