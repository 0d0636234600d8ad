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

#ifndef QCS_MAP_SPEC_H
#define QCS_MAP_SPEC_H

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcs/affine_map.h"
#include "qcs/rational.h"

namespace qcs {

struct MapSpec;

namespace spec {

struct Identity {};

/// u -> u + c mod 1, 0 <= c < 1.
struct Rotation {
    Rational c;
};

/// Block i moves to output slot perm[i]; optional per-block orientation flip.
struct IntervalExchange {
    std::vector<Rational> lengths;
    std::vector<std::size_t> perm;
    std::vector<bool> flips;
};

/// u -> k u mod 1, k >= 2.
struct Expanding {
    int k;
};

/// Applied in listed order: maps[0] first.
struct Composition {
    std::vector<MapSpec> maps;
};

}  // namespace spec

/// Serializable description of a measure-preserving map from the
/// representable barrier family. Parameters are exact rationals.
struct MapSpec {
    std::variant<spec::Identity, spec::Rotation, spec::IntervalExchange, spec::Expanding, spec::Composition> kind;

    static MapSpec identity() {
        return {spec::Identity{}};
    }
    static MapSpec rotation(Rational c) {
        return {spec::Rotation{c}};
    }
    static MapSpec expanding(int k) {
        return {spec::Expanding{k}};
    }
    static MapSpec interval_exchange(std::vector<Rational> lengths, std::vector<std::size_t> perm,
                                     std::vector<bool> flips = {}) {
        return {spec::IntervalExchange{std::move(lengths), std::move(perm), std::move(flips)}};
    }
    static MapSpec composition(std::vector<MapSpec> maps) {
        return {spec::Composition{std::move(maps)}};
    }
};

/// Checks parameter ranges exactly; throws Error(BadSpec).
void validate(const MapSpec &spec);

PiecewiseAffineMap build_map(const MapSpec &spec);

/// {"kind":"rotation","c":"3/8"} etc. Throws Error(BadSpec) on malformed input.
MapSpec map_spec_from_json(const nlohmann::json &j);
nlohmann::json to_json(const MapSpec &spec);

/// Shorthand accepted by the CLI: "identity", "rotation:3/8", "expanding:2",
/// or a JSON object.
MapSpec parse_map_spec(const std::string &text);

}  // namespace qcs

#endif
