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

#include "qcs/complete_state.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "qcs/counter_rng.h"
#include "qcs/error.h"
#include "qcs/factorization.h"
#include "qcs/tolerances.h"

namespace qcs {

namespace {

double clamp_open(double s) {
    if (s <= 0.0) {
        return std::numeric_limits<double>::min();
    }
    if (s >= 1.0) {
        return std::nextafter(1.0, 0.0);
    }
    return s;
}

void require_barrier(const PiecewiseAffineMap &alpha) {
    if (!verify_measure_preserving(alpha)) {
        fail(Errc::NotABarrier, "map does not preserve Lebesgue measure");
    }
}

}  // namespace

CompleteState::CompleteState(PureState state, PiecewiseAffineMap barrier, double label)
    : state_(std::move(state)), barrier_(std::move(barrier)), label_(label) {
    require_barrier(barrier_);
    if (!(label_ > 0.0 && label_ < 1.0)) {
        fail(Errc::OutOfDomain, "label " + std::to_string(label_) + " outside ]0,1[");
    }
    if (barrier_.distance_to_breakpoint(label_) <= tol::kLabelBreakpoint) {
        fail(Errc::LabelOnBreakpoint, "label " + std::to_string(label_) + " sits on a barrier breakpoint");
    }
}

double CompleteState::level() const {
    return clamp_open(barrier_(label_));
}

BarrierComplex::BarrierComplex() : BarrierComplex(MapSpec::identity()) {
}

BarrierComplex::BarrierComplex(MapSpec default_spec)
    : default_spec_(std::move(default_spec)), default_map_(build_map(default_spec_)) {
    require_barrier(default_map_);
}

BarrierComplex &BarrierComplex::set_override(std::string operator_tag, std::string state_tag, MapSpec spec) {
    auto map = build_map(spec);
    require_barrier(map);
    overrides_.insert_or_assign({std::move(operator_tag), std::move(state_tag)},
                                std::make_pair(std::move(spec), std::move(map)));
    return *this;
}

const PiecewiseAffineMap &BarrierComplex::barrier(std::string_view operator_tag, std::string_view state_tag) const {
    if (!overrides_.empty()) {
        const std::pair<std::string, std::string> keys[] = {
            {std::string(operator_tag), std::string(state_tag)},
            {std::string(operator_tag), "*"},
            {"*", std::string(state_tag)},
        };
        for (const auto &key : keys) {
            auto it = overrides_.find(key);
            if (it != overrides_.end()) {
                return it->second.second;
            }
        }
    }
    return default_map_;
}

std::shared_ptr<const BarrierComplex> identity_complex() {
    static const auto instance = std::make_shared<const BarrierComplex>();
    return instance;
}

ObservableFunction::ObservableFunction(HermitianOperator op, std::string tag,
                                       std::shared_ptr<const BarrierComplex> complex)
    : op_(std::move(op)), tag_(std::move(tag)), complex_(std::move(complex)) {
    if (!complex_) {
        complex_ = identity_complex();
    }
}

const PiecewiseAffineMap &ObservableFunction::barrier(std::string_view state_tag) const {
    return complex_->barrier(tag_, state_tag);
}

double ObservableFunction::operator()(const PureState &psi, double z, std::string_view state_tag) const {
    return quantile(spectral_cdf(op_, psi), clamp_open(barrier(state_tag)(z)));
}

PiecewiseConstantFn ObservableFunction::on(const PureState &psi, std::string_view state_tag) const {
    return value_function(op_, psi, barrier(state_tag));
}

double ObservableFunction::mean(const PureState &psi, unsigned power, std::string_view state_tag) const {
    auto f = on(psi, state_tag);
    if (power == 1) {
        return f.integral();
    }
    return f.map_values([power](double v) { return std::pow(v, static_cast<double>(power)); }).integral();
}

double value(const HermitianOperator &a, const CompleteState &c) {
    require_same_dim(a.dim(), c.state().dim(), "value");
    return quantile(spectral_cdf(a, c.state()), c.level());
}

PiecewiseConstantFn value_function(const HermitianOperator &a, const PureState &psi, const PiecewiseAffineMap &alpha) {
    require_same_dim(a.dim(), psi.dim(), "value function");
    return compose(quantile_function(spectral_cdf(a, psi)), alpha);
}

std::vector<ValueProbability> value_distribution(const HermitianOperator &a, const PureState &psi,
                                                 const PiecewiseAffineMap &alpha) {
    require_same_dim(a.dim(), psi.dim(), "value distribution");
    require_barrier(alpha);
    auto cdf = spectral_cdf(a, psi);
    std::vector<ValueProbability> out;
    for (std::size_t k = 0; k < cdf.size(); ++k) {
        double p = alpha.preimage(Interval{cdf.lower_level(k), cdf.level(k)}).measure();
        out.push_back({cdf.support(k), p});
    }
    return out;
}

IntervalSet value_preimage(const HermitianOperator &a, const PureState &psi, const PiecewiseAffineMap &alpha,
                           Interval values) {
    auto cdf = spectral_cdf(a, psi);
    std::vector<Interval> levels;
    for (std::size_t k = 0; k < cdf.size(); ++k) {
        if (cdf.support(k) > values.lo && cdf.support(k) <= values.hi) {
            levels.push_back({cdf.lower_level(k), cdf.level(k)});
        }
    }
    return alpha.preimage(IntervalSet(std::move(levels)));
}

std::vector<double> sample_values(const HermitianOperator &a, const PureState &psi, const PiecewiseAffineMap &alpha,
                                  std::uint64_t seed, std::size_t n, unsigned workers) {
    require_same_dim(a.dim(), psi.dim(), "sample values");
    const auto cdf = spectral_cdf(a, psi);
    const CounterRng rng(seed);
    std::vector<double> out(n);
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::uint64_t stream = 0;
            double z = rng.uniform_open(i, stream);
            while (alpha.distance_to_breakpoint(z) <= tol::kLabelBreakpoint) {
                z = rng.uniform_open(i, ++stream);
            }
            out[i] = quantile(cdf, clamp_open(alpha(z)));
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        fill(0, n);
        return out;
    }
    std::vector<std::thread> threads;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = std::min(n, w * chunk);
        std::size_t end = std::min(n, begin + chunk);
        threads.emplace_back(fill, begin, end);
    }
    for (auto &t : threads) {
        t.join();
    }
    return out;
}

SigmaSimpleRegions sigma_simple_regions(std::span<const CMatrix> projectors, std::span<const double> values,
                                        const PureState &psi, const PiecewiseAffineMap &alpha, bool truncated) {
    if (projectors.empty() || projectors.size() != values.size()) {
        fail(Errc::NotAResolution, "need one value per projector");
    }
    const auto n = static_cast<Eigen::Index>(psi.dim());
    CMatrix sum = CMatrix::Zero(n, n);
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        const auto &p = projectors[i];
        if (p.rows() != n || p.cols() != n) {
            fail(Errc::DimensionMismatch, "projector dimension differs from the state");
        }
        if ((p - p.adjoint()).cwiseAbs().maxCoeff() > tol::kResolution ||
            (p * p - p).cwiseAbs().maxCoeff() > tol::kResolution) {
            fail(Errc::NotAResolution, "entry " + std::to_string(i) + " is not an orthogonal projector");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if ((p * projectors[j]).cwiseAbs().maxCoeff() > tol::kResolution) {
                fail(Errc::NotAResolution, "projectors are not pairwise orthogonal");
            }
        }
        if (i > 0 && !(values[i - 1] < values[i])) {
            fail(Errc::NotAResolution, "values must be strictly increasing");
        }
        sum += p;
    }
    if (!truncated && (sum - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol::kResolution) {
        fail(Errc::NotAResolution, "projectors do not sum to the identity");
    }
    SigmaSimpleRegions out;
    const auto &v = psi.amplitudes();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        double lower = cumulative;
        cumulative += std::max(0.0, v.dot(projectors[i] * v).real());
        if (!truncated && i + 1 == projectors.size()) {
            cumulative = 1.0;
        }
        out.regions.push_back(alpha.preimage(Interval{lower, std::min(cumulative, 1.0)}));
    }
    if (cumulative < 1.0) {
        out.tail = alpha.preimage(Interval{cumulative, 1.0});
    }
    return out;
}

double sigma_simple_value(const SigmaSimpleRegions &regions, std::span<const double> values, double z) {
    for (std::size_t k = 0; k < regions.regions.size(); ++k) {
        if (regions.regions[k].contains(z)) {
            return values[k];
        }
    }
    return 0.0;
}

double expectation_via_labels(const PiecewiseFn &b, const HermitianOperator &a, const PureState &psi,
                              const PiecewiseAffineMap &alpha) {
    double sum = 0.0;
    for (const auto &[lambda, probability] : value_distribution(a, psi, alpha)) {
        sum += b(lambda) * probability;
    }
    return sum;
}

}  // namespace qcs
