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

#include "qcs/dynamics.h"

#include <algorithm>
#include <cmath>

#include "qcs/counter_rng.h"
#include "qcs/error.h"
#include "qcs/json_io.h"
#include "qcs/tolerances.h"

namespace qcs {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kLevelMargin = 1e-12;

PiecewiseAffineMap require_equivalence(PiecewiseAffineMap m) {
    if (!verify_measure_preserving(m)) {
        fail(Errc::NotABarrier, "equivalence is not measure preserving");
    }
    invert(m);
    return m;
}

}  // namespace

EquivalenceComplex::EquivalenceComplex(Rule rule) : rule_(std::move(rule)) {
    std::visit(Overloaded{
                   [](const rule::Fixed &r) { require_equivalence(build_map(r.map)); },
                   [](const rule::PopulationRotation &) {},
                   [](const rule::Table &r) {
                       for (const auto &[state, spec] : r.entries) {
                           require_equivalence(build_map(spec));
                       }
                       if (r.fallback) {
                           require_equivalence(build_map(*r.fallback));
                       }
                   },
               },
               rule_);
}

PiecewiseAffineMap EquivalenceComplex::map_for(const PureState &psi) const {
    return std::visit(
        Overloaded{
            [](const rule::Fixed &r) { return build_map(r.map); },
            [&psi](const rule::PopulationRotation &r) {
                if (r.component >= psi.dim()) {
                    fail(Errc::UndefinedEquivalence, "population component outside the state");
                }
                double c = std::norm(psi.amplitudes()[static_cast<Eigen::Index>(r.component)]);
                return c >= 1.0 ? PiecewiseAffineMap::identity() : rotation_map(c);
            },
            [&psi](const rule::Table &r) {
                for (const auto &[state, spec] : r.entries) {
                    if (state.projectively_equal(psi)) {
                        return build_map(spec);
                    }
                }
                if (!r.fallback) {
                    fail(Errc::UndefinedEquivalence, "no equivalence registered for this state");
                }
                return build_map(*r.fallback);
            },
        },
        rule_);
}

EquivalenceComplex EquivalenceComplex::from_json(const nlohmann::json &j) {
    if (j.is_null()) {
        return EquivalenceComplex();
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        fail(Errc::SchemaError, "equivalence rule needs a string 'kind'");
    }
    auto kind = j["kind"].get<std::string>();
    if (kind == "fixed") {
        if (!j.contains("map")) {
            fail(Errc::SchemaError, "fixed rule needs 'map'");
        }
        return EquivalenceComplex(rule::Fixed{map_spec_from_json(j["map"])});
    }
    if (kind == "population_rotation") {
        if (!j.contains("component") || !is_nonnegative_integer(j["component"])) {
            fail(Errc::SchemaError, "population_rotation rule needs a nonnegative 'component'");
        }
        return EquivalenceComplex(rule::PopulationRotation{j["component"].get<std::size_t>()});
    }
    if (kind == "table") {
        rule::Table table;
        for (const auto &entry : j.value("entries", nlohmann::json::array())) {
            if (!entry.contains("state") || !entry.contains("map")) {
                fail(Errc::SchemaError, "table entries need 'state' and 'map'");
            }
            table.entries.emplace_back(PureState::normalized(vector_from_json(entry["state"])),
                                       map_spec_from_json(entry["map"]));
        }
        if (j.contains("default")) {
            table.fallback = map_spec_from_json(j["default"]);
        }
        return EquivalenceComplex(std::move(table));
    }
    fail(Errc::SchemaError, "unknown equivalence rule '" + kind + "'");
}

nlohmann::json EquivalenceComplex::to_json() const {
    return std::visit(Overloaded{
                          [](const rule::Fixed &r) {
                              return nlohmann::json{{"kind", "fixed"}, {"map", qcs::to_json(r.map)}};
                          },
                          [](const rule::PopulationRotation &r) {
                              return nlohmann::json{{"kind", "population_rotation"}, {"component", r.component}};
                          },
                          [](const rule::Table &r) {
                              nlohmann::json entries = nlohmann::json::array();
                              for (const auto &[state, spec] : r.entries) {
                                  nlohmann::json amps = nlohmann::json::array();
                                  for (auto x : state.amplitudes()) {
                                      amps.push_back({x.real(), x.imag()});
                                  }
                                  entries.push_back({{"state", amps}, {"map", qcs::to_json(spec)}});
                              }
                              nlohmann::json out{{"kind", "table"}, {"entries", entries}};
                              if (r.fallback) {
                                  out["default"] = qcs::to_json(*r.fallback);
                              }
                              return out;
                          },
                      },
                      rule_);
}

CompleteState lift_unitary(const UnitaryOperator &u, const EquivalenceComplex &sigma, const CompleteState &c) {
    const auto &psi = c.state();
    PureState upsi = u.apply(psi);
    auto s_psi = sigma.map_for(psi);
    auto s_upsi = sigma.map_for(upsi);
    auto s_upsi_inv = invert(s_upsi);
    auto barrier = compose(compose(c.barrier(), invert(s_psi)), s_upsi);
    double label = s_upsi_inv(s_psi(c.label()));
    return CompleteState(std::move(upsi), std::move(barrier), label);
}

bool same_complete_state(const CompleteState &a, const CompleteState &b, double label_tolerance) {
    return a.state().projectively_equal(b.state()) && std::abs(a.label() - b.label()) <= label_tolerance &&
           a.barrier().equal_ae(b.barrier());
}

IntertwineResult intertwine_check(const HermitianOperator &a, const UnitaryOperator &u,
                                  const EquivalenceComplex &sigma, const PureState &psi,
                                  const PiecewiseAffineMap &alpha, std::span<const double> labels) {
    const auto rotated = conjugate(a, u);
    const auto cdf = spectral_cdf(rotated, psi);
    IntertwineResult out{true, 0, 0, 0.0};
    for (double z : labels) {
        if (alpha.distance_to_breakpoint(z) <= kLevelMargin) {
            ++out.skipped;
            continue;
        }
        double s = alpha(z);
        bool near_level = s <= kLevelMargin || s >= 1.0 - kLevelMargin;
        for (const auto &step : cdf.steps()) {
            near_level = near_level || std::abs(step.level - s) <= kLevelMargin;
        }
        if (near_level) {
            ++out.skipped;
            continue;
        }
        CompleteState c(psi, alpha, z);
        double lhs = quantile(cdf, s);
        double rhs;
        try {
            rhs = value(a, lift_unitary(u, sigma, c));
        } catch (const Error &e) {
            if (e.code() != Errc::LabelOnBreakpoint) {
                throw;
            }
            ++out.skipped;
            continue;
        }
        double gap = std::abs(lhs - rhs);
        out.max_gap = std::max(out.max_gap, gap);
        out.ok = out.ok && gap <= 1e-10;
        ++out.checked;
    }
    return out;
}

std::vector<double> uniform_labels(std::uint64_t seed, std::size_t n) {
    CounterRng rng(seed);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = rng.uniform_open(i);
    }
    return out;
}

UnitaryOperator unitary_exp(const HermitianOperator &h, double t) {
    const auto n = static_cast<Eigen::Index>(h.dim());
    CMatrix u = CMatrix::Zero(n, n);
    for (const auto &atom : h.eigensystem().atoms()) {
        u += std::exp(Complex(0.0, -atom.value * t)) * atom.projector;
    }
    return UnitaryOperator(u);
}

PureState evolve(const HermitianOperator &h, double t, const PureState &psi0) {
    require_same_dim(h.dim(), psi0.dim(), "evolution");
    CVector out = CVector::Zero(psi0.amplitudes().size());
    for (const auto &atom : h.eigensystem().atoms()) {
        out += std::exp(Complex(0.0, -atom.value * t)) * (atom.projector * psi0.amplitudes());
    }
    return PureState::normalized(out);
}

SchrodingerResult schrodinger_equivalence_check(const ObservableFunction &f, const ObservableFunction &h,
                                                const PureState &psi0, double t0, double dt) {
    const auto &gen = h.op();
    double lhs = (f.mean(evolve(gen, t0 + dt, psi0)) - f.mean(evolve(gen, t0 - dt, psi0))) / (2.0 * dt);
    double rhs = 2.0 * lie(f, h).mean(evolve(gen, t0, psi0));
    return {lhs, rhs, std::abs(lhs - rhs)};
}

EvolutionResult evolution_expectation_check(const HermitianOperator &a, const HermitianOperator &h,
                                            const PureState &psi0, const PiecewiseAffineMap &alpha0,
                                            std::span<const double> times) {
    EvolutionResult out{{}, 0.0};
    for (double t : times) {
        auto psi_t = evolve(h, t, psi0);
        double op_side = expectation(a.matrix(), psi_t.amplitudes());
        double label_side = value_function(a, psi_t, alpha0).integral();
        double gap = std::abs(op_side - label_side);
        out.rows.push_back({t, op_side, label_side, gap});
        out.max_error = std::max(out.max_error, gap);
    }
    return out;
}

}  // namespace qcs
