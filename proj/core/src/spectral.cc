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

#include "qcs/spectral.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcs/error.h"
#include "qcs/tolerances.h"

namespace qcs {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        fail(Errc::DimensionMismatch,
             std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

EigenSystem::EigenSystem(std::vector<SpectralAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) {
        fail(Errc::BadSpec, "eigensystem needs at least one atom");
    }
    const auto n = atoms_.front().projector.rows();
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
        const auto &p = atoms_[k].projector;
        if (p.rows() != n || p.cols() != n) {
            fail(Errc::DimensionMismatch, "projectors of one eigensystem must share a dimension");
        }
        if (k > 0 && !(atoms_[k - 1].value < atoms_[k].value)) {
            fail(Errc::BadSpec, "eigenvalues must be strictly ascending");
        }
    }
}

std::vector<double> EigenSystem::eigenvalues() const {
    std::vector<double> out;
    out.reserve(atoms_.size());
    for (const auto &atom : atoms_) {
        out.push_back(atom.value);
    }
    return out;
}

CMatrix EigenSystem::reconstruct() const {
    CMatrix m = CMatrix::Zero(atoms_.front().projector.rows(), atoms_.front().projector.cols());
    for (const auto &atom : atoms_) {
        m += atom.value * atom.projector;
    }
    return m;
}

namespace {

EigenSystem diagonalize(const CMatrix &entries) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries);
    if (solver.info() != Eigen::Success) {
        fail(Errc::NonHermitian, "eigen decomposition did not converge");
    }
    const auto &values = solver.eigenvalues();
    const auto &vectors = solver.eigenvectors();
    const auto n = entries.rows();

    std::vector<SpectralAtom> atoms;
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index end = start + 1;
        while (end < n && values[end] - values[end - 1] <= tol::kEigenMerge) {
            ++end;
        }
        auto block = vectors.middleCols(start, end - start);
        double mean = values.segment(start, end - start).mean();
        atoms.push_back({mean, block * block.adjoint()});
        start = end;
    }
    return EigenSystem(std::move(atoms));
}

}  // namespace

HermitianOperator::HermitianOperator(CMatrix entries)
    : entries_(std::move(entries)), cache_(std::make_shared<Cache>()) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        fail(Errc::DimensionMismatch, "operator matrix must be square and non-empty");
    }
    double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (!(asym <= tol::kHermitian)) {
        fail(Errc::NonHermitian, "max |A - A^dagger| = " + std::to_string(asym));
    }
}

HermitianOperator HermitianOperator::from_spectrum(EigenSystem spectrum) {
    CMatrix sum = CMatrix::Zero(spectrum.dim(), spectrum.dim());
    for (const auto &atom : spectrum.atoms()) {
        sum += atom.projector;
    }
    double resolution_error = (sum - CMatrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
    if (resolution_error > tol::kResolution) {
        fail(Errc::NotAResolution, "projectors do not sum to the identity");
    }
    CMatrix m = spectrum.reconstruct();
    CMatrix hermitian = 0.5 * (m + m.adjoint());
    HermitianOperator op(std::move(hermitian));
    std::call_once(op.cache_->once, [&] { op.cache_->value.emplace(std::move(spectrum)); });
    return op;
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
    return HermitianOperator(CMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> values) {
    CMatrix m = CMatrix::Zero(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return HermitianOperator(std::move(m));
}

const EigenSystem &HermitianOperator::eigensystem() const {
    std::call_once(cache_->once, [this] { cache_->value.emplace(diagonalize(entries_)); });
    return *cache_->value;
}

const EigenSystem &eigensystem(const HermitianOperator &a) {
    return a.eigensystem();
}

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        fail(Errc::NotNormalized, "empty state vector");
    }
    double norm = amplitudes_.norm();
    if (!(std::abs(norm - 1.0) <= tol::kStateNorm)) {
        fail(Errc::NotNormalized, "state norm is " + std::to_string(norm));
    }
}

PureState PureState::normalized(CVector amplitudes) {
    double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        fail(Errc::NotNormalized, "cannot normalize a zero or non-finite vector");
    }
    return PureState(amplitudes / norm);
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    CVector v = CVector::Zero(dim);
    v[index] = 1.0;
    return PureState(std::move(v));
}

bool PureState::projectively_equal(const PureState &other) const {
    if (other.dim() != dim()) {
        return false;
    }
    return std::abs(std::abs(amplitudes_.dot(other.amplitudes_)) - 1.0) <= tol::kProjective;
}

StepCDF::StepCDF(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) {
        fail(Errc::BadSpec, "a distribution function needs at least one step");
    }
    double previous_level = 0.0;
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        if (k > 0 && !(steps_[k - 1].support < steps_[k].support)) {
            fail(Errc::BadSpec, "support points must be strictly ascending");
        }
        if (!(steps_[k].level > previous_level) || steps_[k].level > 1.0) {
            fail(Errc::BadSpec, "levels must be strictly ascending inside ]0,1]");
        }
        previous_level = steps_[k].level;
    }
    if (steps_.back().level != 1.0) {
        fail(Errc::BadSpec, "last level must be exactly 1");
    }
}

std::vector<double> StepCDF::supports() const {
    std::vector<double> out;
    out.reserve(steps_.size());
    for (const auto &s : steps_) {
        out.push_back(s.support);
    }
    return out;
}

double StepCDF::operator()(double r) const {
    auto it = std::upper_bound(steps_.begin(), steps_.end(), r,
                               [](double x, const Step &s) { return x < s.support; });
    return it == steps_.begin() ? 0.0 : std::prev(it)->level;
}

double StepCDF::left_limit(double r) const {
    auto it = std::lower_bound(steps_.begin(), steps_.end(), r,
                               [](const Step &s, double x) { return s.support < x; });
    return it == steps_.begin() ? 0.0 : std::prev(it)->level;
}

std::size_t quantile_index(const StepCDF &cdf, double s) {
    if (!(s > 0.0 && s < 1.0)) {
        fail(Errc::OutOfDomain, "quantile level " + std::to_string(s) + " outside ]0,1[");
    }
    auto steps = cdf.steps();
    auto it = std::lower_bound(steps.begin(), steps.end(), s,
                               [](const Step &step, double x) { return step.level < x; });
    return static_cast<std::size_t>(it - steps.begin());
}

double quantile(const StepCDF &cdf, double s) {
    return cdf.support(quantile_index(cdf, s));
}

std::vector<double> spectral_weights(const HermitianOperator &a, const PureState &psi) {
    require_same_dim(a.dim(), psi.dim(), "spectral weights");
    const auto &v = psi.amplitudes();
    std::vector<double> weights;
    for (const auto &atom : a.eigensystem().atoms()) {
        weights.push_back(std::max(0.0, v.dot(atom.projector * v).real()));
    }
    return weights;
}

StepCDF spectral_cdf(const HermitianOperator &a, const PureState &psi) {
    auto weights = spectral_weights(a, psi);
    const auto atoms = a.eigensystem().atoms();
    double total = 0.0;
    for (double w : weights) {
        if (w >= tol::kZeroWeight) {
            total += w;
        }
    }
    std::vector<Step> steps;
    double cumulative = 0.0;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (weights[k] < tol::kZeroWeight) {
            continue;
        }
        cumulative += weights[k];
        steps.push_back({atoms[k].value, cumulative / total});
    }
    steps.back().level = 1.0;
    return StepCDF(std::move(steps));
}

HermitianOperator borel_apply(const PiecewiseFn &b, const HermitianOperator &a) {
    std::vector<SpectralAtom> mapped;
    for (const auto &atom : a.eigensystem().atoms()) {
        mapped.push_back({b(atom.value), atom.projector});
    }
    std::stable_sort(mapped.begin(), mapped.end(),
                     [](const SpectralAtom &x, const SpectralAtom &y) { return x.value < y.value; });
    std::vector<SpectralAtom> merged;
    std::size_t group = 0;
    for (auto &atom : mapped) {
        if (!merged.empty() && atom.value - merged.back().value <= tol::kEigenMerge) {
            ++group;
            // running mean keeps the merged value inside the cluster
            merged.back().value += (atom.value - merged.back().value) / static_cast<double>(group + 1);
            merged.back().projector += atom.projector;
        } else {
            group = 0;
            merged.push_back(std::move(atom));
        }
    }
    return HermitianOperator::from_spectrum(EigenSystem(std::move(merged)));
}

double moment(const HermitianOperator &a, const PureState &psi, unsigned k) {
    auto weights = spectral_weights(a, psi);
    const auto atoms = a.eigensystem().atoms();
    double sum = 0.0;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        sum += std::pow(atoms[j].value, static_cast<double>(k)) * weights[j];
    }
    return sum;
}

double expectation(const CMatrix &a, const CVector &psi) {
    return psi.dot(a * psi).real();
}

}  // namespace qcs
