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

#ifndef QCS_PHASE_SPACE_H
#define QCS_PHASE_SPACE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qcs/affine_map.h"
#include "qcs/piecewise_fn.h"
#include "qcs/rational.h"
#include "qcs/spectral.h"

namespace qcs {

// Periodic 1-D grid: q_j = (j - N/2) dq, p_m = 2 pi m / (N dq) with m in [-N/2, N/2).
struct PhaseSpaceGrid {
    std::size_t n;
    double dq;

    double dp() const;
    double q(std::size_t j) const;
    double p(std::size_t m) const;
    void validate() const;
};

// Unitary DFT b_m = N^{-1/2} sum_j a_j exp(-2 pi i j k_m / N), k_m the centered frequency of slot m.
CMatrix dft_matrix(std::size_t n);

class PhaseSpaceState {
   public:
    // sectors[s][j] = psi_s(q_j) for s = -sigma..sigma; requires sum |psi|^2 dq = 1 within 1e-12.
    PhaseSpaceState(Rational spin, PhaseSpaceGrid grid, std::vector<CVector> sectors);

    static PhaseSpaceState from_coefficients(Rational spin, PhaseSpaceGrid grid, const CVector &coefficients);

    const Rational &spin() const {
        return spin_;
    }
    const PhaseSpaceGrid &grid() const {
        return grid_;
    }
    std::size_t sector_count() const {
        return sectors_.size();
    }
    double sector_value(std::size_t s) const;
    const CVector &sector(std::size_t s) const {
        return sectors_[s];
    }

    // a_{s,j} = psi_s(q_j) sqrt(dq), stacked sector by sector.
    CVector coefficients() const;
    // DFT of the sector coefficients, so |b_{s,m}|^2 is the momentum mass of cell m.
    CVector momentum_coefficients() const;
    PureState pure_state() const;
    std::size_t dim() const {
        return sectors_.size() * grid_.n;
    }

   private:
    Rational spin_;
    PhaseSpaceGrid grid_;
    std::vector<CVector> sectors_;
};

// Cell masses w_s(q_j, p_m) dq dp; sectors with zero norm carry no cells.
class PhaseSpaceMeasure {
   public:
    PhaseSpaceMeasure(PhaseSpaceGrid grid, std::vector<double> sector_values, std::vector<Eigen::MatrixXd> masses);

    const PhaseSpaceGrid &grid() const {
        return grid_;
    }
    std::size_t sector_count() const {
        return masses_.size();
    }
    double sector_value(std::size_t s) const {
        return sector_values_[s];
    }
    double mass(std::size_t s, std::size_t j, std::size_t m) const {
        return masses_[s](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m));
    }
    double density(std::size_t s, std::size_t j, std::size_t m) const;
    double total_mass() const;

    std::vector<double> position_marginal() const;
    std::vector<double> momentum_marginal() const;

   private:
    PhaseSpaceGrid grid_;
    std::vector<double> sector_values_;
    std::vector<Eigen::MatrixXd> masses_;
};

PhaseSpaceMeasure build_measure(const PhaseSpaceState &psi);

// A function of the phase-space label, tabulated per cell in canonical order (sector, q, p),
// with the exact distribution of its values under the measure.
struct LabelObservable {
    std::vector<double> cell_values;
    StepCDF distribution;
};

LabelObservable position_observable(const PiecewiseFn &g, const PhaseSpaceMeasure &mu);
LabelObservable momentum_observable(const PiecewiseFn &f, const PhaseSpaceMeasure &mu);
LabelObservable spin_observable(const PhaseSpaceMeasure &mu);

HermitianOperator position_operator(const PiecewiseFn &g, const PhaseSpaceState &psi);
HermitianOperator momentum_operator(const PiecewiseFn &f, const PhaseSpaceState &psi);
HermitianOperator spin_operator(const PhaseSpaceState &psi);

// Cells laid end to end on ]0,1[ with lengths equal to their masses.
struct UnitIntervalLayout {
    std::vector<double> cuts;
    std::vector<std::size_t> cells;
};

UnitIntervalLayout to_unit_interval(const PhaseSpaceMeasure &mu);

PiecewiseConstantFn pull_to_unit_interval(const LabelObservable &obs, const UnitIntervalLayout &layout);

struct QmpsResult {
    double operator_side;
    double label_side;
    double gap;
    bool barrier_preserves_measure;
};

// Realizes the label observable as quantile(F_psi^A) o beta through the unit-interval layout and
// integrates the resulting value function.
QmpsResult qmps_check(const HermitianOperator &a, const LabelObservable &obs, const PhaseSpaceState &psi,
                      const PhaseSpaceMeasure &mu);

// Total variation distance between the joint law of (g(q), f(p)) under mu and the comonotone
// coupling that a single shared barrier would force.
double shared_barrier_obstruction(const PiecewiseFn &g, const PiecewiseFn &f, const PhaseSpaceMeasure &mu);

PhaseSpaceState gaussian_state(Rational spin, PhaseSpaceGrid grid, double width, double momentum,
                               std::vector<double> sector_weights = {});

}  // namespace qcs

#endif
