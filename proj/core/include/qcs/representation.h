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

#ifndef QCS_REPRESENTATION_H
#define QCS_REPRESENTATION_H

#include <array>
#include <span>
#include <vector>

#include "qcs/affine_map.h"
#include "qcs/complete_state.h"
#include "qcs/piecewise_fn.h"
#include "qcs/spectral.h"

namespace qcs {

// True when (b o A) evaluated through alpha equals b applied to the values of A, off breakpoints.
// b must be strictly increasing and continuous on the spectrum hull, else NotMonotone.
bool monotone_compose_check(const PiecewiseFn &b, const HermitianOperator &a, const PureState &psi,
                            const PiecewiseAffineMap &alpha);

// Measure of the labels where b(value of A through alpha) differs from the value of b(A) through beta.
double composition_disagreement(const HermitianOperator &a, const PiecewiseFn &b, const PureState &psi,
                                const PiecewiseAffineMap &alpha, const PiecewiseAffineMap &beta);

// Three orthogonal blocks E, F, G with <E> = w[0], <F> = w[1], <G> = w[2] and A = E - G.
// Dyadic weights get exactly representable amplitudes so every level is exact in binary.
struct ThreeBlockModel {
    CMatrix e;
    CMatrix f;
    CMatrix g;
    HermitianOperator a;
    HermitianOperator a_squared;
    PureState psi;
};

ThreeBlockModel three_block_model(std::array<double, 3> weights);

// Amplitudes whose squares sum exactly to w when w is dyadic with a short expansion.
std::vector<double> dyadic_amplitudes(double w);

struct NoGoWitness {
    ThreeBlockModel model;
    PiecewiseFn b;
    double disagreement;
};

NoGoWitness no_go_witness(const PiecewiseAffineMap &alpha, std::array<double, 3> weights = {0.125, 0.25, 0.625});

PiecewiseAffineMap repair_barrier(const HermitianOperator &a, const PiecewiseFn &b, const PiecewiseAffineMap &alpha,
                                  const PureState &psi);

struct SpectrumImage {
    bool closed;
    std::vector<double> image;
    std::vector<double> spectrum;
};

SpectrumImage spectrum_image_check(const HermitianOperator &a, const PiecewiseAffineMap &alpha,
                                   std::span<const PureState> probes);

// Eigenvectors of every atom of a, so each eigenvalue is reachable.
std::vector<PureState> eigenvector_probes(const HermitianOperator &a);

struct Identifiability {
    bool agree;
    bool operators_equal;
    bool implication_holds;
};

Identifiability identifiability_check(const HermitianOperator &a1, const HermitianOperator &a2,
                                      const PiecewiseAffineMap &alpha, std::span<const PureState> probes);

// Basis vectors plus (e_i + e_j)/sqrt2 and (e_i + i e_j)/sqrt2 for i < j.
std::vector<PureState> standard_probes(std::size_t dim);

}  // namespace qcs

#endif
