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

#include "qcs/interval_set.h"

#include <algorithm>

namespace qcs {

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
    std::erase_if(intervals, [](const Interval &i) { return !(i.hi > i.lo); });
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval &a, const Interval &b) { return a.lo < b.lo; });
    for (const auto &i : intervals) {
        if (!intervals_.empty() && i.lo <= intervals_.back().hi) {
            intervals_.back().hi = std::max(intervals_.back().hi, i.hi);
        } else {
            intervals_.push_back(i);
        }
    }
}

IntervalSet IntervalSet::unit() {
    return IntervalSet({{0.0, 1.0}});
}

double IntervalSet::measure() const {
    double total = 0.0;
    for (const auto &i : intervals_) {
        total += i.length();
    }
    return total;
}

bool IntervalSet::contains(double x) const {
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                               [](const Interval &i, double v) { return i.hi < v; });
    return it != intervals_.end() && it->lo < x && x <= it->hi;
}

IntervalSet IntervalSet::unite(const IntervalSet &other) const {
    std::vector<Interval> all(intervals_);
    all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
    return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet &other) const {
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    const auto &a = intervals_;
    const auto &b = other.intervals_;
    while (i < a.size() && j < b.size()) {
        double lo = std::max(a[i].lo, b[j].lo);
        double hi = std::min(a[i].hi, b[j].hi);
        if (hi > lo) {
            out.push_back({lo, hi});
        }
        if (a[i].hi < b[j].hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement() const {
    std::vector<Interval> out;
    double cursor = 0.0;
    for (const auto &i : intervals_) {
        if (i.lo > cursor) {
            out.push_back({cursor, std::min(i.lo, 1.0)});
        }
        cursor = std::max(cursor, i.hi);
    }
    if (cursor < 1.0) {
        out.push_back({cursor, 1.0});
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet &other) const {
    return intersect(other.complement());
}

IntervalSet IntervalSet::symmetric_difference(const IntervalSet &other) const {
    return subtract(other).unite(other.subtract(*this));
}

}  // namespace qcs
