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

#ifndef QCS_INTERVAL_SET_H
#define QCS_INTERVAL_SET_H

#include <span>
#include <vector>

namespace qcs {

/// The left-open right-closed interval ]lo, hi].
struct Interval {
    double lo;
    double hi;

    double length() const {
        return hi > lo ? hi - lo : 0.0;
    }
};

/// Finite union of disjoint intervals ]lo, hi], kept sorted and coalesced.
/// Endpoints are a null set, so only measure-level statements are meaningful.
class IntervalSet {
   public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> intervals);

    /// ]0, 1[.
    static IntervalSet unit();

    std::span<const Interval> intervals() const {
        return intervals_;
    }
    bool empty() const {
        return intervals_.empty();
    }
    double measure() const;
    bool contains(double x) const;

    IntervalSet unite(const IntervalSet &other) const;
    IntervalSet intersect(const IntervalSet &other) const;
    IntervalSet subtract(const IntervalSet &other) const;
    IntervalSet symmetric_difference(const IntervalSet &other) const;
    /// Complement inside ]0, 1[.
    IntervalSet complement() const;

   private:
    std::vector<Interval> intervals_;
};

}  // namespace qcs

#endif
