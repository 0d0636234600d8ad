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

#ifndef QCS_ALGEBRA_H
#define QCS_ALGEBRA_H

#include <cstddef>

#include "qcs/complete_state.h"
#include "qcs/spectral.h"

namespace qcs {

class UnitaryOperator {
   public:
    explicit UnitaryOperator(CMatrix entries);

    static UnitaryOperator identity(std::size_t dim);
    static UnitaryOperator hadamard();

    std::size_t dim() const {
        return static_cast<std::size_t>(entries_.rows());
    }
    const CMatrix &matrix() const {
        return entries_;
    }
    UnitaryOperator adjoint() const;
    CVector apply(const CVector &v) const {
        return entries_ * v;
    }
    PureState apply(const PureState &psi) const;

   private:
    CMatrix entries_;
};

UnitaryOperator operator*(const UnitaryOperator &u, const UnitaryOperator &v);

// U^dagger A U.
HermitianOperator conjugate(const HermitianOperator &a, const UnitaryOperator &u);

// (M + M^dagger) / 2, for matrices that are Hermitian up to rounding.
HermitianOperator hermitian_part(const CMatrix &m);

// |psi|^2 times the label-side mean of f on [psi]; the zero vector gives 0.
double quadratic_form(const ObservableFunction &f, const CVector &psi);

// Gradient of the quadratic form in the real coordinates (Re, Im), packed as d/dRe + i d/dIm.
CVector quadratic_form_gradient(const ObservableFunction &f, const CVector &psi, double h = 1e-5);

// Max relative error between the finite-difference gradient and 2 A psi.
double gradient_check(const ObservableFunction &f, const PureState &psi, double h = 1e-5);

CMatrix lie_bracket(const CMatrix &a, const CMatrix &b);
CMatrix jordan_product(const CMatrix &a, const CMatrix &b);

ObservableFunction lie(const ObservableFunction &f, const ObservableFunction &g);
ObservableFunction jordan(const ObservableFunction &f, const ObservableFunction &g);

// Complex-valued observable re + i im.
struct ComplexObservable {
    ObservableFunction re;
    ObservableFunction im;

    Complex mean(const PureState &psi) const;
    CMatrix matrix() const;
};

ComplexObservable star(const ObservableFunction &f, const ObservableFunction &g);

enum class ProductKind { Lie, Jordan, Star };

ComplexObservable algebra_product(ProductKind kind, const ObservableFunction &f, const ObservableFunction &g);

double dispersion(const ObservableFunction &f, const PureState &psi);
double operator_dispersion(const HermitianOperator &a, const PureState &psi);

struct HeisenbergResult {
    double lhs;
    double rhs;
    bool holds;
};

HeisenbergResult heisenberg_check(const ObservableFunction &f, const ObservableFunction &g, const PureState &psi);

}  // namespace qcs

#endif
