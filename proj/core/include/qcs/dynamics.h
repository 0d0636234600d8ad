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

#ifndef QCS_DYNAMICS_H
#define QCS_DYNAMICS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcs/algebra.h"
#include "qcs/complete_state.h"
#include "qcs/map_spec.h"

namespace qcs {

namespace rule {

// Same equivalence for every state.
struct Fixed {
    MapSpec map;
};

// Rotation by the population |psi_k|^2 of one basis component.
struct PopulationRotation {
    std::size_t component;
};

// Lookup by projective equality, with an optional fallback.
struct Table {
    std::vector<std::pair<PureState, MapSpec>> entries;
    std::optional<MapSpec> fallback;
};

}  // namespace rule

class EquivalenceComplex {
   public:
    using Rule = std::variant<rule::Fixed, rule::PopulationRotation, rule::Table>;

    EquivalenceComplex() : EquivalenceComplex(rule::Fixed{MapSpec::identity()}) {
    }
    explicit EquivalenceComplex(Rule rule);

    static EquivalenceComplex from_json(const nlohmann::json &j);
    nlohmann::json to_json() const;

    const Rule &rule() const {
        return rule_;
    }

    // sigma for [psi]; UndefinedEquivalence when the rule does not cover it.
    PiecewiseAffineMap map_for(const PureState &psi) const;

   private:
    Rule rule_;
};

CompleteState lift_unitary(const UnitaryOperator &u, const EquivalenceComplex &sigma, const CompleteState &c);

bool same_complete_state(const CompleteState &a, const CompleteState &b, double label_tolerance = 1e-10);

struct IntertwineResult {
    bool ok;
    std::size_t checked;
    std::size_t skipped;
    double max_gap;
};

// Compares the value of U^dagger A U at (psi, alpha, z) with the value of A at the lifted state, per label.
// Labels within 1e-12 of a barrier breakpoint or of a level boundary are skipped.
IntertwineResult intertwine_check(const HermitianOperator &a, const UnitaryOperator &u,
                                  const EquivalenceComplex &sigma, const PureState &psi,
                                  const PiecewiseAffineMap &alpha, std::span<const double> labels);

std::vector<double> uniform_labels(std::uint64_t seed, std::size_t n);

PureState evolve(const HermitianOperator &h, double t, const PureState &psi0);
UnitaryOperator unitary_exp(const HermitianOperator &h, double t);

struct SchrodingerResult {
    double lhs;
    double rhs;
    double gap;
};

// h supplies the generator: psi_t evolves under Op(h).
SchrodingerResult schrodinger_equivalence_check(const ObservableFunction &f, const ObservableFunction &h,
                                                const PureState &psi0, double t0, double dt = 1e-4);

struct EvolutionRow {
    double t;
    double operator_side;
    double label_side;
    double gap;
};

struct EvolutionResult {
    std::vector<EvolutionRow> rows;
    double max_error;
};

EvolutionResult evolution_expectation_check(const HermitianOperator &a, const HermitianOperator &h,
                                            const PureState &psi0, const PiecewiseAffineMap &alpha0,
                                            std::span<const double> times);

}  // namespace qcs

#endif
