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

#ifndef QCS_SPECTRAL_H
#define QCS_SPECTRAL_H

#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qcs/piecewise_fn.h"

namespace qcs {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// One spectral atom: an eigenvalue and the orthogonal projector onto its
/// eigenspace.
struct SpectralAtom {
    double value;
    CMatrix projector;
};

/// Spectral resolution sum_k value_k * P_k with strictly ascending values.
class EigenSystem {
   public:
    explicit EigenSystem(std::vector<SpectralAtom> atoms);

    std::span<const SpectralAtom> atoms() const {
        return atoms_;
    }
    std::size_t size() const {
        return atoms_.size();
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(atoms_.front().projector.rows());
    }
    std::vector<double> eigenvalues() const;
    CMatrix reconstruct() const;

   private:
    std::vector<SpectralAtom> atoms_;
};

/// Finite-dimensional self-adjoint operator. The spectral decomposition is
/// computed lazily, exactly once, and shared between copies.
class HermitianOperator {
   public:
    /// Throws Error(NonHermitian) when max|A - A^dagger| > 1e-12.
    explicit HermitianOperator(CMatrix entries);

    /// Builds sum_k value_k * P_k and seeds the decomposition cache so the
    /// given projectors are used verbatim.
    static HermitianOperator from_spectrum(EigenSystem spectrum);
    static HermitianOperator identity(std::size_t dim);
    static HermitianOperator diagonal(std::span<const double> values);

    std::size_t dim() const {
        return static_cast<std::size_t>(entries_.rows());
    }
    const CMatrix &matrix() const {
        return entries_;
    }
    const EigenSystem &eigensystem() const;

   private:
    struct Cache {
        std::once_flag once;
        std::optional<EigenSystem> value;
    };

    CMatrix entries_;
    std::shared_ptr<Cache> cache_;
};

/// Diagonalizes `a`, merging eigenvalues closer than 1e-12 into one atom.
const EigenSystem &eigensystem(const HermitianOperator &a);

/// Unit vector in C^dim, representing the projective class [psi].
class PureState {
   public:
    /// Throws Error(NotNormalized) when | ||psi|| - 1 | > 1e-12.
    explicit PureState(CVector amplitudes);
    /// Normalizes first; throws Error(NotNormalized) on the zero vector.
    static PureState normalized(CVector amplitudes);
    static PureState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    const CVector &amplitudes() const {
        return amplitudes_;
    }
    /// |<psi, phi>| = 1 within 1e-10.
    bool projectively_equal(const PureState &other) const;

   private:
    CVector amplitudes_;
};

struct Step {
    double support;
    double level;
};

/// Right-continuous distribution function with finitely many jumps. Step k
/// says F(r) = level_k for support_k <= r < support_{k+1}; the final level is 1.
class StepCDF {
   public:
    explicit StepCDF(std::vector<Step> steps);

    std::span<const Step> steps() const {
        return steps_;
    }
    std::size_t size() const {
        return steps_.size();
    }
    double support(std::size_t k) const {
        return steps_[k].support;
    }
    double level(std::size_t k) const {
        return steps_[k].level;
    }
    /// c_{k-1}, with c_{-1} = 0.
    double lower_level(std::size_t k) const {
        return k == 0 ? 0.0 : steps_[k - 1].level;
    }
    double weight(std::size_t k) const {
        return level(k) - lower_level(k);
    }
    std::vector<double> supports() const;

    /// F(r).
    double operator()(double r) const;
    /// F(r-).
    double left_limit(double r) const;

   private:
    std::vector<Step> steps_;
};

/// min{ r : F(r) >= s } for s in ]0,1[; throws Error(OutOfDomain) otherwise.
double quantile(const StepCDF &cdf, double s);
/// Index k with c_{k-1} < s <= c_k.
std::size_t quantile_index(const StepCDF &cdf, double s);

/// <psi, P_k psi> for every atom of `a`, in eigenvalue order, zeros kept.
std::vector<double> spectral_weights(const HermitianOperator &a, const PureState &psi);

/// F_psi^A(r) = <psi, E_(-inf, r] psi>. Atoms lighter than 1e-14 are
/// dropped and the levels renormalized so the last one is exactly 1.
StepCDF spectral_cdf(const HermitianOperator &a, const PureState &psi);

/// b(A) by functional calculus on the spectral atoms; atoms with equal
/// b-values are merged. Throws Error(DomainGap) if b misses an eigenvalue.
HermitianOperator borel_apply(const PiecewiseFn &b, const HermitianOperator &a);

/// sum_j lambda_j^k <P_j>_psi.
double moment(const HermitianOperator &a, const PureState &psi, unsigned k);

/// Re <psi, A psi> computed from the matrix.
double expectation(const CMatrix &a, const CVector &psi);

void require_same_dim(std::size_t a, std::size_t b, const char *what);

}  // namespace qcs

#endif
