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

#include "qcs/phase_space.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "qcs/complete_state.h"
#include "qcs/error.h"
#include "qcs/factorization.h"
#include "qcs/tolerances.h"

namespace qcs {

namespace {

StepCDF distribution_from_masses(const std::map<double, double> &masses) {
    double total = 0.0;
    for (const auto &[v, w] : masses) {
        total += w;
    }
    std::vector<Step> steps;
    double cumulative = 0.0;
    for (const auto &[v, w] : masses) {
        if (w < tol::kZeroWeight) {
            continue;
        }
        cumulative += w;
        steps.push_back({v, cumulative / total});
    }
    steps.back().level = 1.0;
    return StepCDF(std::move(steps));
}

template <class ValueOf>
LabelObservable tabulate(const PhaseSpaceMeasure &mu, ValueOf value_of) {
    const std::size_t n = mu.grid().n;
    LabelObservable out{{}, StepCDF({{0.0, 1.0}})};
    out.cell_values.reserve(mu.sector_count() * n * n);
    std::map<double, double> masses;
    for (std::size_t s = 0; s < mu.sector_count(); ++s) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t m = 0; m < n; ++m) {
                double v = value_of(s, j, m);
                out.cell_values.push_back(v);
                masses[v] += mu.mass(s, j, m);
            }
        }
    }
    out.distribution = distribution_from_masses(masses);
    return out;
}

double eval_on_grid(const PiecewiseFn &fn, double x, const char *what) {
    if (!fn.defined_at(x)) {
        fail(Errc::DomainGap, std::string(what) + " function undefined at grid point " + std::to_string(x));
    }
    return fn(x);
}

// Groups basis indices by value and returns the spectrum with projectors built in the given basis.
HermitianOperator operator_from_values(const std::vector<double> &values, const CMatrix *basis_change) {
    const auto dim = static_cast<Eigen::Index>(values.size());
    std::map<double, std::vector<Eigen::Index>> groups;
    for (Eigen::Index i = 0; i < dim; ++i) {
        groups[values[static_cast<std::size_t>(i)]].push_back(i);
    }
    std::vector<SpectralAtom> atoms;
    for (const auto &[v, idx] : groups) {
        CMatrix p;
        if (basis_change == nullptr) {
            p = CMatrix::Zero(dim, dim);
            for (auto i : idx) {
                p(i, i) = 1.0;
            }
        } else {
            CMatrix rows(static_cast<Eigen::Index>(idx.size()), dim);
            for (std::size_t r = 0; r < idx.size(); ++r) {
                rows.row(static_cast<Eigen::Index>(r)) = basis_change->row(idx[r]);
            }
            p = rows.adjoint() * rows;
        }
        atoms.push_back({v, std::move(p)});
    }
    return HermitianOperator::from_spectrum(EigenSystem(std::move(atoms)));
}

}  // namespace

double PhaseSpaceGrid::dp() const {
    return 2.0 * std::numbers::pi / (static_cast<double>(n) * dq);
}

double PhaseSpaceGrid::q(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(n / 2)) * dq;
}

double PhaseSpaceGrid::p(std::size_t m) const {
    return (static_cast<double>(m) - static_cast<double>(n / 2)) * dp();
}

void PhaseSpaceGrid::validate() const {
    if (n == 0 || !(dq > 0.0) || !std::isfinite(dq)) {
        fail(Errc::BadSpec, "grid needs N >= 1 and dq > 0");
    }
}

CMatrix dft_matrix(std::size_t n) {
    const auto size = static_cast<Eigen::Index>(n);
    CMatrix f(size, size);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index m = 0; m < size; ++m) {
        auto k = static_cast<double>(m) - static_cast<double>(n / 2);
        for (Eigen::Index j = 0; j < size; ++j) {
            double phase = -2.0 * std::numbers::pi * static_cast<double>(j) * k / static_cast<double>(n);
            f(m, j) = scale * std::polar(1.0, phase);
        }
    }
    return f;
}

PhaseSpaceState::PhaseSpaceState(Rational spin, PhaseSpaceGrid grid, std::vector<CVector> sectors)
    : spin_(spin), grid_(grid), sectors_(std::move(sectors)) {
    grid_.validate();
    Rational twice = spin_ * 2;
    if (spin_ < Rational(0) || twice.denominator() != 1) {
        fail(Errc::BadSpec, "spin must be a nonnegative half-integer");
    }
    if (sectors_.size() != static_cast<std::size_t>(twice.numerator() + 1)) {
        fail(Errc::DimensionMismatch, "need 2 sigma + 1 sectors");
    }
    double norm = 0.0;
    for (const auto &s : sectors_) {
        if (static_cast<std::size_t>(s.size()) != grid_.n) {
            fail(Errc::DimensionMismatch, "sector length differs from the grid size");
        }
        norm += s.squaredNorm() * grid_.dq;
    }
    if (!(std::abs(norm - 1.0) <= tol::kStateNorm)) {
        fail(Errc::NotNormalized, "sum |psi|^2 dq = " + std::to_string(norm));
    }
}

PhaseSpaceState PhaseSpaceState::from_coefficients(Rational spin, PhaseSpaceGrid grid, const CVector &coefficients) {
    grid.validate();
    auto count = static_cast<std::size_t>((spin * 2).numerator() + 1);
    if (static_cast<std::size_t>(coefficients.size()) != count * grid.n) {
        fail(Errc::DimensionMismatch, "coefficient vector must have (2 sigma + 1) N entries");
    }
    std::vector<CVector> sectors;
    const auto n = static_cast<Eigen::Index>(grid.n);
    for (std::size_t s = 0; s < count; ++s) {
        sectors.push_back(coefficients.segment(static_cast<Eigen::Index>(s) * n, n) / std::sqrt(grid.dq));
    }
    return PhaseSpaceState(spin, grid, std::move(sectors));
}

double PhaseSpaceState::sector_value(std::size_t s) const {
    return -to_double(spin_) + static_cast<double>(s);
}

CVector PhaseSpaceState::coefficients() const {
    CVector out(static_cast<Eigen::Index>(dim()));
    const auto n = static_cast<Eigen::Index>(grid_.n);
    for (std::size_t s = 0; s < sectors_.size(); ++s) {
        out.segment(static_cast<Eigen::Index>(s) * n, n) = sectors_[s] * std::sqrt(grid_.dq);
    }
    return out;
}

CVector PhaseSpaceState::momentum_coefficients() const {
    const CMatrix f = dft_matrix(grid_.n);
    CVector a = coefficients();
    CVector out(a.size());
    const auto n = static_cast<Eigen::Index>(grid_.n);
    for (std::size_t s = 0; s < sectors_.size(); ++s) {
        auto offset = static_cast<Eigen::Index>(s) * n;
        out.segment(offset, n) = f * a.segment(offset, n);
    }
    return out;
}

PureState PhaseSpaceState::pure_state() const {
    return PureState::normalized(coefficients());
}

PhaseSpaceMeasure::PhaseSpaceMeasure(PhaseSpaceGrid grid, std::vector<double> sector_values,
                                     std::vector<Eigen::MatrixXd> masses)
    : grid_(grid), sector_values_(std::move(sector_values)), masses_(std::move(masses)) {
    if (sector_values_.size() != masses_.size() || masses_.empty()) {
        fail(Errc::DimensionMismatch, "one mass table per sector");
    }
    if (!(std::abs(total_mass() - 1.0) <= tol::kDensity)) {
        fail(Errc::NotNormalized, "phase-space mass is " + std::to_string(total_mass()));
    }
}

double PhaseSpaceMeasure::density(std::size_t s, std::size_t j, std::size_t m) const {
    return mass(s, j, m) / (grid_.dq * grid_.dp());
}

double PhaseSpaceMeasure::total_mass() const {
    double total = 0.0;
    for (const auto &m : masses_) {
        total += m.sum();
    }
    return total;
}

std::vector<double> PhaseSpaceMeasure::position_marginal() const {
    std::vector<double> out(grid_.n, 0.0);
    for (const auto &m : masses_) {
        for (std::size_t j = 0; j < grid_.n; ++j) {
            out[j] += m.row(static_cast<Eigen::Index>(j)).sum();
        }
    }
    return out;
}

std::vector<double> PhaseSpaceMeasure::momentum_marginal() const {
    std::vector<double> out(grid_.n, 0.0);
    for (const auto &m : masses_) {
        for (std::size_t k = 0; k < grid_.n; ++k) {
            out[k] += m.col(static_cast<Eigen::Index>(k)).sum();
        }
    }
    return out;
}

PhaseSpaceMeasure build_measure(const PhaseSpaceState &psi) {
    const auto n = static_cast<Eigen::Index>(psi.grid().n);
    CVector a = psi.coefficients();
    CVector b = psi.momentum_coefficients();
    std::vector<double> values;
    std::vector<Eigen::MatrixXd> masses;
    for (std::size_t s = 0; s < psi.sector_count(); ++s) {
        auto offset = static_cast<Eigen::Index>(s) * n;
        Eigen::VectorXd qa = a.segment(offset, n).cwiseAbs2();
        Eigen::VectorXd pb = b.segment(offset, n).cwiseAbs2();
        double norm2 = qa.sum();
        if (norm2 == 0.0) {
            continue;
        }
        values.push_back(psi.sector_value(s));
        masses.push_back(qa * pb.transpose() / norm2);
    }
    return PhaseSpaceMeasure(psi.grid(), std::move(values), std::move(masses));
}

LabelObservable position_observable(const PiecewiseFn &g, const PhaseSpaceMeasure &mu) {
    std::vector<double> gq(mu.grid().n);
    for (std::size_t j = 0; j < gq.size(); ++j) {
        gq[j] = eval_on_grid(g, mu.grid().q(j), "position");
    }
    return tabulate(mu, [&](std::size_t, std::size_t j, std::size_t) { return gq[j]; });
}

LabelObservable momentum_observable(const PiecewiseFn &f, const PhaseSpaceMeasure &mu) {
    std::vector<double> fp(mu.grid().n);
    for (std::size_t m = 0; m < fp.size(); ++m) {
        fp[m] = eval_on_grid(f, mu.grid().p(m), "momentum");
    }
    return tabulate(mu, [&](std::size_t, std::size_t, std::size_t m) { return fp[m]; });
}

LabelObservable spin_observable(const PhaseSpaceMeasure &mu) {
    return tabulate(mu, [&](std::size_t s, std::size_t, std::size_t) { return mu.sector_value(s); });
}

HermitianOperator position_operator(const PiecewiseFn &g, const PhaseSpaceState &psi) {
    const auto &grid = psi.grid();
    std::vector<double> values;
    for (std::size_t s = 0; s < psi.sector_count(); ++s) {
        for (std::size_t j = 0; j < grid.n; ++j) {
            values.push_back(eval_on_grid(g, grid.q(j), "position"));
        }
    }
    return operator_from_values(values, nullptr);
}

HermitianOperator momentum_operator(const PiecewiseFn &f, const PhaseSpaceState &psi) {
    const auto &grid = psi.grid();
    const auto n = static_cast<Eigen::Index>(grid.n);
    const CMatrix block = dft_matrix(grid.n);
    const auto dim = static_cast<Eigen::Index>(psi.dim());
    CMatrix full = CMatrix::Zero(dim, dim);
    std::vector<double> values;
    for (std::size_t s = 0; s < psi.sector_count(); ++s) {
        auto offset = static_cast<Eigen::Index>(s) * n;
        full.block(offset, offset, n, n) = block;
        for (std::size_t m = 0; m < grid.n; ++m) {
            values.push_back(eval_on_grid(f, grid.p(m), "momentum"));
        }
    }
    return operator_from_values(values, &full);
}

HermitianOperator spin_operator(const PhaseSpaceState &psi) {
    std::vector<double> values;
    for (std::size_t s = 0; s < psi.sector_count(); ++s) {
        values.insert(values.end(), psi.grid().n, psi.sector_value(s));
    }
    return operator_from_values(values, nullptr);
}

UnitIntervalLayout to_unit_interval(const PhaseSpaceMeasure &mu) {
    const std::size_t n = mu.grid().n;
    UnitIntervalLayout out{{0.0}, {}};
    double total = mu.total_mass();
    double cursor = 0.0;
    std::size_t index = 0;
    for (std::size_t s = 0; s < mu.sector_count(); ++s) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t m = 0; m < n; ++m, ++index) {
                double next = std::min(1.0, cursor + mu.mass(s, j, m) / total);
                if (next > out.cuts.back()) {
                    out.cuts.push_back(next);
                    out.cells.push_back(index);
                }
                cursor = next;
            }
        }
    }
    out.cuts.back() = 1.0;
    return out;
}

PiecewiseConstantFn pull_to_unit_interval(const LabelObservable &obs, const UnitIntervalLayout &layout) {
    std::vector<double> values;
    values.reserve(layout.cells.size());
    for (auto cell : layout.cells) {
        values.push_back(obs.cell_values[cell]);
    }
    return PiecewiseConstantFn(layout.cuts, std::move(values)).simplified();
}

QmpsResult qmps_check(const HermitianOperator &a, const LabelObservable &obs, const PhaseSpaceState &psi,
                      const PhaseSpaceMeasure &mu) {
    const auto state = psi.pure_state();
    const auto cdf = spectral_cdf(a, state);
    const auto layout = to_unit_interval(mu);
    auto pulled = pull_to_unit_interval(obs, layout);
    // Values carried by less than the zero-weight threshold are absent from the spectral CDF;
    // attach them to the nearest atom.
    const auto support = cdf.supports();
    auto snapped = pulled.map_values([&support](double v) {
        auto it = std::lower_bound(support.begin(), support.end(), v);
        if (it == support.end()) {
            return support.back();
        }
        if (it != support.begin() && v - *(it - 1) < *it - v) {
            return *(it - 1);
        }
        return *it;
    });
    auto beta = factor_against_cdf(snapped, cdf);
    auto realized = value_function(a, state, beta);
    QmpsResult out{};
    out.barrier_preserves_measure = verify_measure_preserving(beta) && realized.disagreement(snapped, 1e-9) == 0.0;
    out.operator_side = expectation(a.matrix(), state.amplitudes());
    // Integrate the realized value function cell by cell against mu.
    std::vector<double> cell_value = obs.cell_values;
    for (std::size_t i = 0; i < layout.cells.size(); ++i) {
        cell_value[layout.cells[i]] = realized(0.5 * (layout.cuts[i] + layout.cuts[i + 1]));
    }
    double label = 0.0;
    const std::size_t n = mu.grid().n;
    std::size_t index = 0;
    for (std::size_t s = 0; s < mu.sector_count(); ++s) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t m = 0; m < n; ++m, ++index) {
                label += cell_value[index] * mu.mass(s, j, m);
            }
        }
    }
    out.label_side = label;
    out.gap = std::abs(out.operator_side - out.label_side);
    return out;
}

double shared_barrier_obstruction(const PiecewiseFn &g, const PiecewiseFn &f, const PhaseSpaceMeasure &mu) {
    const auto pos = position_observable(g, mu);
    const auto mom = momentum_observable(f, mu);
    std::map<std::pair<double, double>, double> joint;
    for (std::size_t i = 0; i < pos.cell_values.size(); ++i) {
        const std::size_t n = mu.grid().n;
        std::size_t s = i / (n * n);
        std::size_t j = (i / n) % n;
        std::size_t m = i % n;
        joint[{pos.cell_values[i], mom.cell_values[i]}] += mu.mass(s, j, m);
    }
    std::map<std::pair<double, double>, double> comonotone;
    std::vector<double> levels;
    for (const auto &st : pos.distribution.steps()) {
        levels.push_back(st.level);
    }
    for (const auto &st : mom.distribution.steps()) {
        levels.push_back(st.level);
    }
    std::sort(levels.begin(), levels.end());
    double lower = 0.0;
    for (double level : levels) {
        if (level <= lower) {
            continue;
        }
        double mid = 0.5 * (lower + level);
        comonotone[{quantile(pos.distribution, mid), quantile(mom.distribution, mid)}] += level - lower;
        lower = level;
    }
    double tv = 0.0;
    for (const auto &[key, w] : joint) {
        auto it = comonotone.find(key);
        tv += std::abs(w - (it == comonotone.end() ? 0.0 : it->second));
    }
    for (const auto &[key, w] : comonotone) {
        if (!joint.contains(key)) {
            tv += w;
        }
    }
    return 0.5 * tv;
}

PhaseSpaceState gaussian_state(Rational spin, PhaseSpaceGrid grid, double width, double momentum,
                               std::vector<double> sector_weights) {
    grid.validate();
    auto count = static_cast<std::size_t>((spin * 2).numerator() + 1);
    if (sector_weights.empty()) {
        sector_weights.assign(count, 1.0 / static_cast<double>(count));
    }
    if (sector_weights.size() != count) {
        fail(Errc::DimensionMismatch, "one weight per spin sector");
    }
    CVector shape(static_cast<Eigen::Index>(grid.n));
    for (std::size_t j = 0; j < grid.n; ++j) {
        double q = grid.q(j);
        shape[static_cast<Eigen::Index>(j)] = std::polar(std::exp(-q * q / (4.0 * width * width)), momentum * q);
    }
    shape /= std::sqrt(shape.squaredNorm() * grid.dq);
    double total = 0.0;
    for (double w : sector_weights) {
        total += w;
    }
    std::vector<CVector> sectors;
    for (double w : sector_weights) {
        sectors.push_back(shape * std::sqrt(w / total));
    }
    return PhaseSpaceState(spin, grid, std::move(sectors));
}

}  // namespace qcs
