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

#include "qcs/algebra.h"

#include <algorithm>
#include <cmath>

#include "qcs/error.h"
#include "qcs/tolerances.h"

namespace qcs {

UnitaryOperator::UnitaryOperator(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        fail(Errc::DimensionMismatch, "unitary matrix must be square and non-empty");
    }
    const auto n = entries_.rows();
    double err = (entries_.adjoint() * entries_ - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (!(err <= tol::kUnitary)) {
        fail(Errc::NonUnitary, "max |U^dagger U - I| = " + std::to_string(err));
    }
}

UnitaryOperator UnitaryOperator::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return UnitaryOperator(CMatrix::Identity(n, n));
}

UnitaryOperator UnitaryOperator::hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    CMatrix h(2, 2);
    h << r, r, r, -r;
    return UnitaryOperator(h);
}

UnitaryOperator UnitaryOperator::adjoint() const {
    return UnitaryOperator(entries_.adjoint());
}

PureState UnitaryOperator::apply(const PureState &psi) const {
    require_same_dim(dim(), psi.dim(), "unitary action");
    return PureState::normalized(entries_ * psi.amplitudes());
}

UnitaryOperator operator*(const UnitaryOperator &u, const UnitaryOperator &v) {
    require_same_dim(u.dim(), v.dim(), "unitary product");
    return UnitaryOperator(u.matrix() * v.matrix());
}

HermitianOperator hermitian_part(const CMatrix &m) {
    return HermitianOperator(0.5 * (m + m.adjoint()));
}

HermitianOperator conjugate(const HermitianOperator &a, const UnitaryOperator &u) {
    require_same_dim(a.dim(), u.dim(), "conjugation");
    return hermitian_part(u.matrix().adjoint() * a.matrix() * u.matrix());
}

double quadratic_form(const ObservableFunction &f, const CVector &psi) {
    require_same_dim(f.op().dim(), static_cast<std::size_t>(psi.size()), "quadratic form");
    double norm2 = psi.squaredNorm();
    if (norm2 == 0.0) {
        return 0.0;
    }
    return norm2 * f.mean(PureState::normalized(psi));
}

CVector quadratic_form_gradient(const ObservableFunction &f, const CVector &psi, double h) {
    CVector grad(psi.size());
    for (Eigen::Index j = 0; j < psi.size(); ++j) {
        CVector plus = psi;
        CVector minus = psi;
        plus(j) += h;
        minus(j) -= h;
        double d_re = (quadratic_form(f, plus) - quadratic_form(f, minus)) / (2.0 * h);
        plus(j) = psi(j) + Complex(0.0, h);
        minus(j) = psi(j) - Complex(0.0, h);
        double d_im = (quadratic_form(f, plus) - quadratic_form(f, minus)) / (2.0 * h);
        grad(j) = Complex(d_re, d_im);
    }
    return grad;
}

double gradient_check(const ObservableFunction &f, const PureState &psi, double h) {
    CVector expected = 2.0 * (f.op().matrix() * psi.amplitudes());
    CVector got = quadratic_form_gradient(f, psi.amplitudes(), h);
    double scale = std::max(1.0, expected.cwiseAbs().maxCoeff());
    return (got - expected).cwiseAbs().maxCoeff() / scale;
}

CMatrix lie_bracket(const CMatrix &a, const CMatrix &b) {
    return Complex(0.0, -0.5) * (a * b - b * a);
}

CMatrix jordan_product(const CMatrix &a, const CMatrix &b) {
    return 0.5 * (a * b + b * a);
}

ObservableFunction lie(const ObservableFunction &f, const ObservableFunction &g) {
    require_same_dim(f.op().dim(), g.op().dim(), "lie product");
    return ObservableFunction(hermitian_part(lie_bracket(f.op().matrix(), g.op().matrix())),
                              "{" + f.tag() + "," + g.tag() + "}", f.complex());
}

ObservableFunction jordan(const ObservableFunction &f, const ObservableFunction &g) {
    require_same_dim(f.op().dim(), g.op().dim(), "jordan product");
    return ObservableFunction(hermitian_part(jordan_product(f.op().matrix(), g.op().matrix())),
                              "(" + f.tag() + "o" + g.tag() + ")", f.complex());
}

Complex ComplexObservable::mean(const PureState &psi) const {
    return {re.mean(psi), im.mean(psi)};
}

CMatrix ComplexObservable::matrix() const {
    return re.op().matrix() + Complex(0.0, 1.0) * im.op().matrix();
}

ComplexObservable star(const ObservableFunction &f, const ObservableFunction &g) {
    return {jordan(f, g), lie(f, g)};
}

ComplexObservable algebra_product(ProductKind kind, const ObservableFunction &f, const ObservableFunction &g) {
    const auto n = static_cast<Eigen::Index>(f.op().dim());
    ObservableFunction zero(HermitianOperator(CMatrix::Zero(n, n)), "0", f.complex());
    switch (kind) {
        case ProductKind::Lie:
            return {lie(f, g), zero};
        case ProductKind::Jordan:
            return {jordan(f, g), zero};
        case ProductKind::Star:
            break;
    }
    return star(f, g);
}

double dispersion(const ObservableFunction &f, const PureState &psi) {
    auto values = f.on(psi);
    double m1 = values.integral();
    double m2 = values.map_values([](double x) { return x * x; }).integral();
    return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

double operator_dispersion(const HermitianOperator &a, const PureState &psi) {
    double m1 = expectation(a.matrix(), psi.amplitudes());
    double m2 = expectation(a.matrix() * a.matrix(), psi.amplitudes());
    return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

HeisenbergResult heisenberg_check(const ObservableFunction &f, const ObservableFunction &g, const PureState &psi) {
    double lhs = dispersion(f, psi) * dispersion(g, psi);
    double rhs = std::abs(lie(f, g).mean(psi));
    return {lhs, rhs, lhs >= rhs - 1e-12};
}

}  // namespace qcs
