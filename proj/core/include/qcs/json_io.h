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

#ifndef QCS_JSON_IO_H
#define QCS_JSON_IO_H

#include <string>

#include <nlohmann/json.hpp>

#include "qcs/piecewise_fn.h"
#include "qcs/spectral.h"

namespace qcs {

// Entries are numbers or [re, im] pairs. Matrices are arrays of rows; "sigma_x", "sigma_y",
// "sigma_z" and "hadamard" name the usual 2x2 matrices.
CMatrix matrix_from_json(const nlohmann::json &j);
CVector vector_from_json(const nlohmann::json &j);
nlohmann::json to_json(const CVector &v);

// Named functions ("identity", "square", "absolute") or objects with a "kind" of
// identity, square, absolute, constant, affine, monomial, polynomial, indicator, piecewise.
// Piecewise breakpoints may be "-inf" or "inf".
PiecewiseFn piecewise_fn_from_json(const nlohmann::json &j);

// True for integers >= 0, whether stored signed or unsigned.
bool is_nonnegative_integer(const nlohmann::json &j);

// 17 significant digits.
std::string format_double(double x);

// Serializes with format_double for every float and sorted keys.
std::string dump_json(const nlohmann::json &j, int indent = 2);

}  // namespace qcs

#endif
