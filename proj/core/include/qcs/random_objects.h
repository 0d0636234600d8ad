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

#ifndef QCS_RANDOM_OBJECTS_H
#define QCS_RANDOM_OBJECTS_H

#include <cstddef>
#include <random>

#include "qcs/algebra.h"
#include "qcs/map_spec.h"
#include "qcs/spectral.h"

namespace qcs {

using Rng = std::mt19937_64;

HermitianOperator random_hermitian(Rng &rng, std::size_t dim);

// Random eigenbasis with eigenvalues drawn from a small integer set, so degeneracies are common.
HermitianOperator random_degenerate_hermitian(Rng &rng, std::size_t dim);

PureState random_state(Rng &rng, std::size_t dim);
UnitaryOperator random_unitary(Rng &rng, std::size_t dim);

// Measure-preserving map spec with at most max_pieces affine pieces.
MapSpec random_map_spec(Rng &rng, std::size_t max_pieces = 6, bool bijective = false);

StepCDF random_step_cdf(Rng &rng, std::size_t max_atoms = 6);

std::size_t random_dim(Rng &rng, std::size_t lo, std::size_t hi);

}  // namespace qcs

#endif
