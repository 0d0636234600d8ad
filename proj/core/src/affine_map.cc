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

#include "qcs/affine_map.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qcs/error.h"
#include "qcs/tolerances.h"

namespace qcs {

namespace {

// Source point where the piece takes the value y, exact at the endpoints.
double source_of(const AffinePiece &p, double y) {
    if (y == p.y_lo) {
        return p.lo;
    }
    if (y == p.y_hi) {
        return p.hi;
    }
    return std::clamp(p.inverse(y), p.lo, p.hi);
}

// Sorted points grouped into clusters whose consecutive members are closer
// than tol::kBreakpoint. Each cluster keeps its smallest and largest member.
struct Cluster {
    double min;
    double max;
};

std::vector<Cluster> cluster_points(std::vector<double> points) {
    std::sort(points.begin(), points.end());
    std::vector<Cluster> clusters;
    for (double x : points) {
        if (!clusters.empty() && x - clusters.back().max <= tol::kBreakpoint) {
            clusters.back().max = x;
        } else {
            clusters.push_back({x, x});
        }
    }
    return clusters;
}

std::size_t cluster_of(const std::vector<Cluster> &clusters, double x) {
    auto it = std::lower_bound(clusters.begin(), clusters.end(), x,
                               [](const Cluster &c, double v) { return c.max < v; });
    if (it == clusters.end()) {
        return clusters.size() - 1;
    }
    return static_cast<std::size_t>(it - clusters.begin());
}

}  // namespace

double AffinePiece::operator()(double u) const {
    double t = (u - lo) / (hi - lo);
    return y_lo + t * (y_hi - y_lo);
}

double AffinePiece::inverse(double y) const {
    double t = (y - y_lo) / (y_hi - y_lo);
    return lo + t * (hi - lo);
}

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) {
        fail(Errc::BadSpec, "a map needs at least one piece");
    }
    if (std::abs(pieces_.front().lo) > tol::kMapEndpoint || std::abs(pieces_.back().hi - 1.0) > tol::kMapEndpoint) {
        fail(Errc::BadSpec, "map pieces must cover ]0,1[");
    }
    pieces_.front().lo = 0.0;
    pieces_.back().hi = 1.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        auto &p = pieces_[i];
        if (i > 0) {
            double gap = p.lo - pieces_[i - 1].hi;
            if (std::abs(gap) > tol::kMapEndpoint) {
                fail(Errc::BadSpec, "map pieces must be contiguous (gap " + std::to_string(gap) + ")");
            }
            p.lo = pieces_[i - 1].hi;
        }
        if (!(p.hi > p.lo)) {
            fail(Errc::BadSpec, "map piece with empty source interval");
        }
        if (!std::isfinite(p.y_lo) || !std::isfinite(p.y_hi) || p.y_lo == p.y_hi) {
            fail(Errc::BadSpec, "map piece slope must be finite and nonzero");
        }
        for (double *y : {&p.y_lo, &p.y_hi}) {
            if (*y < -tol::kMapEndpoint || *y > 1.0 + tol::kMapEndpoint) {
                fail(Errc::BadSpec, "map image must lie in [0,1]");
            }
            *y = std::clamp(*y, 0.0, 1.0);
        }
    }
}

PiecewiseAffineMap PiecewiseAffineMap::identity() {
    return PiecewiseAffineMap({{0.0, 1.0, 0.0, 1.0}});
}

std::vector<double> PiecewiseAffineMap::breakpoints() const {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
        out.push_back(pieces_[i].hi);
    }
    return out;
}

double PiecewiseAffineMap::distance_to_breakpoint(double u) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
        best = std::min(best, std::abs(u - pieces_[i].hi));
    }
    return best;
}

std::size_t PiecewiseAffineMap::piece_index(double u) const {
    auto it = std::lower_bound(pieces_.begin(), pieces_.end(), u,
                               [](const AffinePiece &p, double v) { return p.hi < v; });
    if (it == pieces_.end()) {
        return pieces_.size() - 1;
    }
    return static_cast<std::size_t>(it - pieces_.begin());
}

double PiecewiseAffineMap::operator()(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        fail(Errc::OutOfDomain, "label " + std::to_string(u) + " outside ]0,1[");
    }
    return pieces_[piece_index(u)](u);
}

IntervalSet PiecewiseAffineMap::preimage(Interval target) const {
    std::vector<Interval> out;
    for (const auto &p : pieces_) {
        double a = std::max(target.lo, p.image_lo());
        double b = std::min(target.hi, p.image_hi());
        if (!(b > a)) {
            continue;
        }
        double ua = source_of(p, a);
        double ub = source_of(p, b);
        out.push_back({std::min(ua, ub), std::max(ua, ub)});
    }
    return IntervalSet(std::move(out));
}

IntervalSet PiecewiseAffineMap::preimage(const IntervalSet &target) const {
    IntervalSet out;
    for (const auto &i : target.intervals()) {
        out = out.unite(preimage(i));
    }
    return out;
}

PiecewiseAffineMap PiecewiseAffineMap::simplified() const {
    std::vector<AffinePiece> out;
    for (const auto &p : pieces_) {
        if (!out.empty()) {
            auto &q = out.back();
            double s1 = q.slope();
            double s2 = p.slope();
            if (std::abs(q.y_hi - p.y_lo) <= tol::kMapEndpoint &&
                std::abs(s1 - s2) <= tol::kMapEndpoint * std::max(1.0, std::abs(s1))) {
                q.hi = p.hi;
                q.y_hi = p.y_hi;
                continue;
            }
        }
        out.push_back(p);
    }
    return PiecewiseAffineMap(std::move(out));
}

bool PiecewiseAffineMap::equal_ae(const PiecewiseAffineMap &other, double tolerance) const {
    std::vector<double> points = breakpoints();
    auto more = other.breakpoints();
    points.insert(points.end(), more.begin(), more.end());
    points.push_back(0.0);
    points.push_back(1.0);
    auto clusters = cluster_points(std::move(points));
    for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
        double a = clusters[i].max;
        double b = clusters[i + 1].min;
        for (double t : {0.25, 0.75}) {
            double u = a + t * (b - a);
            if (std::abs((*this)(u) - other(u)) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

PiecewiseConstantFn::PiecewiseConstantFn(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.empty() || breakpoints_.size() != values_.size() + 1) {
        fail(Errc::BadSpec, "step function needs n+1 breakpoints for n values");
    }
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] < breakpoints_[i + 1])) {
            fail(Errc::BadSpec, "step function breakpoints must be strictly ascending");
        }
    }
}

double PiecewiseConstantFn::operator()(double x) const {
    if (!(x > breakpoints_.front()) || x > breakpoints_.back()) {
        fail(Errc::DomainGap, "point " + std::to_string(x) + " outside the step function domain");
    }
    auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), x);
    return values_[static_cast<std::size_t>(it - (breakpoints_.begin() + 1))];
}

PiecewiseConstantFn PiecewiseConstantFn::simplified(double tolerance) const {
    std::vector<double> bp{breakpoints_.front()};
    std::vector<double> vals;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!vals.empty() && std::abs(vals.back() - values_[i]) <= tolerance) {
            bp.back() = breakpoints_[i + 1];
        } else {
            vals.push_back(values_[i]);
            bp.push_back(breakpoints_[i + 1]);
        }
    }
    return PiecewiseConstantFn(std::move(bp), std::move(vals));
}

PiecewiseConstantFn PiecewiseConstantFn::map_values(const std::function<double(double)> &f) const {
    std::vector<double> vals;
    vals.reserve(values_.size());
    for (double v : values_) {
        vals.push_back(f(v));
    }
    return PiecewiseConstantFn(breakpoints_, std::move(vals));
}

std::vector<std::pair<double, double>> PiecewiseConstantFn::pushforward(double tolerance) const {
    std::vector<std::pair<double, double>> pieces;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        pieces.emplace_back(values_[i], breakpoints_[i + 1] - breakpoints_[i]);
    }
    std::sort(pieces.begin(), pieces.end());
    std::vector<std::pair<double, double>> out;
    double group_start = 0.0;
    for (const auto &[v, len] : pieces) {
        if (!out.empty() && v - group_start <= tolerance) {
            out.back().second += len;
        } else {
            group_start = v;
            out.emplace_back(v, len);
        }
    }
    return out;
}

IntervalSet PiecewiseConstantFn::level_set(double value, double tolerance) const {
    std::vector<Interval> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (std::abs(values_[i] - value) <= tolerance) {
            out.push_back(piece(i));
        }
    }
    return IntervalSet(std::move(out));
}

double PiecewiseConstantFn::integral() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        sum += values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
    }
    return sum;
}

double PiecewiseConstantFn::disagreement(const PiecewiseConstantFn &other, double tolerance) const {
    double lo = std::max(breakpoints_.front(), other.breakpoints_.front());
    double hi = std::min(breakpoints_.back(), other.breakpoints_.back());
    std::vector<double> points;
    for (double x : breakpoints_) {
        if (x >= lo && x <= hi) {
            points.push_back(x);
        }
    }
    for (double x : other.breakpoints_) {
        if (x >= lo && x <= hi) {
            points.push_back(x);
        }
    }
    points.push_back(lo);
    points.push_back(hi);
    auto clusters = cluster_points(std::move(points));
    double measure = 0.0;
    for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
        double a = clusters[i].max;
        double b = clusters[i + 1].min;
        double mid = 0.5 * (a + b);
        if (std::abs((*this)(mid) - other(mid)) > tolerance) {
            measure += clusters[i + 1].min - clusters[i].min;
        }
    }
    return measure;
}

PiecewiseConstantDensity::PiecewiseConstantDensity(std::vector<DensityCell> cells) : cells_(std::move(cells)) {
    for (const auto &c : cells_) {
        if (!(c.hi > c.lo) || c.lo < 0.0 || c.hi > 1.0 || !(c.density >= 0.0)) {
            fail(Errc::BadSpec, "density cells must be nonempty subintervals of ]0,1[ with density >= 0");
        }
    }
}

PiecewiseConstantDensity PiecewiseConstantDensity::uniform() {
    return PiecewiseConstantDensity({{0.0, 1.0, 1.0}});
}

double PiecewiseConstantDensity::mass() const {
    double m = 0.0;
    for (const auto &c : cells_) {
        m += c.density * (c.hi - c.lo);
    }
    return m;
}

double PiecewiseConstantDensity::density_at(double x) const {
    double d = 0.0;
    for (const auto &c : cells_) {
        if (c.lo < x && x <= c.hi) {
            d += c.density;
        }
    }
    return d;
}

PiecewiseConstantDensity pushforward_density(const PiecewiseAffineMap &m, const PiecewiseConstantDensity &d) {
    struct Image {
        double lo;
        double hi;
        double density;
    };
    std::vector<Image> images;
    std::vector<double> points{0.0, 1.0};
    for (const auto &p : m.pieces()) {
        for (const auto &c : d.cells()) {
            double a = std::max(p.lo, c.lo);
            double b = std::min(p.hi, c.hi);
            if (!(b > a) || c.density == 0.0) {
                continue;
            }
            double ya = a == p.lo ? p.y_lo : p(a);
            double yb = b == p.hi ? p.y_hi : p(b);
            Image img{std::min(ya, yb), std::max(ya, yb), c.density / std::abs(p.slope())};
            images.push_back(img);
            points.push_back(img.lo);
            points.push_back(img.hi);
        }
    }
    auto clusters = cluster_points(std::move(points));
    // difference array over the cells between consecutive clusters
    std::vector<double> delta(clusters.size() + 1, 0.0);
    for (const auto &img : images) {
        std::size_t from = cluster_of(clusters, img.lo);
        std::size_t to = cluster_of(clusters, img.hi);
        delta[from] += img.density;
        delta[to] -= img.density;
    }
    std::vector<DensityCell> cells;
    double running = 0.0;
    for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
        running += delta[i];
        // Cells meet at cluster midpoints so they tile ]0,1[ even when clusters chain.
        double lo = i == 0 ? clusters[i].min : 0.5 * (clusters[i].min + clusters[i].max);
        double hi = i + 2 == clusters.size() ? clusters[i + 1].max : 0.5 * (clusters[i + 1].min + clusters[i + 1].max);
        lo = std::clamp(lo, 0.0, 1.0);
        hi = std::clamp(hi, 0.0, 1.0);
        if (hi > lo) {
            cells.push_back({lo, hi, std::abs(running) < 1e-300 ? 0.0 : running});
        }
    }
    return PiecewiseConstantDensity(std::move(cells));
}

bool verify_measure_preserving(const PiecewiseAffineMap &m) {
    auto image = pushforward_density(m, PiecewiseConstantDensity::uniform());
    double covered = 0.0;
    for (const auto &c : image.cells()) {
        // Endpoints carry absolute rounding, so a cell of length L can only pin its density to
        // within kEndpointRounding / L.
        double len = c.hi - c.lo;
        if (std::abs(c.density - 1.0) * len > tol::kDensity * len + tol::kEndpointRounding) {
            return false;
        }
        covered += c.hi - c.lo;
    }
    return std::abs(covered - 1.0) <= tol::kDensity;
}

PiecewiseAffineMap compose(const PiecewiseAffineMap &outer, const PiecewiseAffineMap &inner) {
    std::vector<AffinePiece> out;
    const auto outer_pieces = outer.pieces();
    for (const auto &p : inner.pieces()) {
        double ilo = p.image_lo();
        double ihi = p.image_hi();
        double covered = 0.0;
        std::size_t q0 = outer.piece_index(std::max(ilo, std::numeric_limits<double>::min()));
        for (std::size_t qi = q0; qi < outer_pieces.size(); ++qi) {
            const auto &q = outer_pieces[qi];
            if (q.lo >= ihi) {
                break;
            }
            double ya = std::max(ilo, q.lo);
            double yb = std::min(ihi, q.hi);
            if (!(yb > ya)) {
                continue;
            }
            covered += yb - ya;
            double ua = source_of(p, ya);
            double ub = source_of(p, yb);
            double za = ya == q.lo ? q.y_lo : q(ya);
            double zb = yb == q.hi ? q.y_hi : q(yb);
            if (ua > ub) {
                std::swap(ua, ub);
                std::swap(za, zb);
            }
            if (ub - ua < tol::kBreakpoint || za == zb) {
                continue;
            }
            out.push_back({ua, ub, za, zb});
        }
        if (covered < (ihi - ilo) - tol::kMapEndpoint) {
            fail(Errc::DomainMismatch, "inner image leaves the domain of the outer map");
        }
    }
    std::sort(out.begin(), out.end(), [](const AffinePiece &a, const AffinePiece &b) { return a.lo < b.lo; });
    return PiecewiseAffineMap(std::move(out)).simplified();
}

PiecewiseAffineMap invert(const PiecewiseAffineMap &m) {
    std::vector<AffinePiece> pieces(m.pieces().begin(), m.pieces().end());
    std::sort(pieces.begin(), pieces.end(),
              [](const AffinePiece &a, const AffinePiece &b) { return a.image_lo() < b.image_lo(); });
    double cursor = 0.0;
    std::vector<AffinePiece> out;
    for (const auto &p : pieces) {
        if (std::abs(p.image_lo() - cursor) > tol::kMapEndpoint) {
            fail(Errc::NotInjective, "piece images overlap or leave a gap near " + std::to_string(cursor));
        }
        cursor = p.image_hi();
        if (p.increasing()) {
            out.push_back({p.y_lo, p.y_hi, p.lo, p.hi});
        } else {
            out.push_back({p.y_hi, p.y_lo, p.hi, p.lo});
        }
    }
    if (std::abs(cursor - 1.0) > tol::kMapEndpoint) {
        fail(Errc::NotInjective, "piece images do not cover ]0,1[");
    }
    return PiecewiseAffineMap(std::move(out));
}

PiecewiseConstantFn compose(const PiecewiseConstantFn &g, const PiecewiseAffineMap &m) {
    struct Part {
        double lo;
        double hi;
        double value;
    };
    std::vector<Part> parts;
    const auto bp = g.breakpoints();
    for (const auto &p : m.pieces()) {
        double ilo = p.image_lo();
        double ihi = p.image_hi();
        if (ilo < bp.front() - tol::kMapEndpoint || ihi > bp.back() + tol::kMapEndpoint) {
            fail(Errc::DomainMismatch, "map image leaves the step function domain");
        }
        auto first = std::upper_bound(bp.begin(), bp.end(), ilo);
        std::size_t gi = first == bp.begin() ? 0 : static_cast<std::size_t>(first - bp.begin()) - 1;
        for (; gi < g.size(); ++gi) {
            double ya = std::max(ilo, bp[gi]);
            double yb = std::min(ihi, bp[gi + 1]);
            if (bp[gi] >= ihi) {
                break;
            }
            if (!(yb > ya)) {
                continue;
            }
            double ua = source_of(p, ya);
            double ub = source_of(p, yb);
            if (ua > ub) {
                std::swap(ua, ub);
            }
            if (ub > ua) {
                parts.push_back({ua, ub, g.values()[gi]});
            }
        }
    }
    std::sort(parts.begin(), parts.end(), [](const Part &a, const Part &b) { return a.lo < b.lo; });
    std::vector<double> breakpoints{0.0};
    std::vector<double> values;
    for (const auto &part : parts) {
        if (part.hi <= breakpoints.back()) {
            continue;
        }
        breakpoints.push_back(part.hi);
        values.push_back(part.value);
    }
    breakpoints.back() = 1.0;
    return PiecewiseConstantFn(std::move(breakpoints), std::move(values)).simplified();
}

PiecewiseAffineMap rotation_map(double c) {
    if (!(c >= 0.0 && c < 1.0)) {
        fail(Errc::BadSpec, "rotation offset must satisfy 0 <= c < 1");
    }
    if (c == 0.0) {
        return PiecewiseAffineMap::identity();
    }
    double cut = 1.0 - c;
    return PiecewiseAffineMap({{0.0, cut, c, 1.0}, {cut, 1.0, 0.0, c}});
}

PiecewiseAffineMap interval_exchange_map(std::span<const double> lengths, std::span<const std::size_t> perm,
                                         const std::vector<bool> &flips) {
    const std::size_t n = lengths.size();
    if (n == 0 || perm.size() != n || (!flips.empty() && flips.size() != n)) {
        fail(Errc::BadSpec, "interval exchange needs matching lengths/perm/flips");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t slot : perm) {
        if (slot >= n || seen[slot]) {
            fail(Errc::BadSpec, "interval exchange perm must be a permutation of 0..n-1");
        }
        seen[slot] = true;
    }
    double total = 0.0;
    for (double l : lengths) {
        if (!(l > 0.0)) {
            fail(Errc::BadSpec, "interval exchange lengths must be positive");
        }
        total += l;
    }
    if (std::abs(total - 1.0) > tol::kMapEndpoint) {
        fail(Errc::BadSpec, "interval exchange lengths must sum to 1");
    }
    std::vector<double> slot_length(n);
    for (std::size_t i = 0; i < n; ++i) {
        slot_length[perm[i]] = lengths[i];
    }
    std::vector<double> slot_start(n, 0.0);
    for (std::size_t j = 1; j < n; ++j) {
        slot_start[j] = slot_start[j - 1] + slot_length[j - 1];
    }
    std::vector<AffinePiece> pieces;
    double source = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double lo = source;
        double hi = i + 1 == n ? 1.0 : source + lengths[i];
        double t0 = slot_start[perm[i]];
        double t1 = perm[i] + 1 == n ? 1.0 : slot_start[perm[i] + 1];
        bool flip = !flips.empty() && flips[i];
        pieces.push_back(flip ? AffinePiece{lo, hi, t1, t0} : AffinePiece{lo, hi, t0, t1});
        source = hi;
    }
    return PiecewiseAffineMap(std::move(pieces));
}

PiecewiseAffineMap expanding_map(int k) {
    if (k < 2) {
        fail(Errc::BadSpec, "expanding map needs k >= 2");
    }
    std::vector<AffinePiece> pieces;
    for (int j = 0; j < k; ++j) {
        pieces.push_back({static_cast<double>(j) / k, static_cast<double>(j + 1) / k, 0.0, 1.0});
    }
    return PiecewiseAffineMap(std::move(pieces));
}

}  // namespace qcs
