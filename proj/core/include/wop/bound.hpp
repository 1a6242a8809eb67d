/*
   Copyright 2026 The wopineq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wop/basis.hpp"
#include "wop/moments.hpp"

namespace wop {

struct SpdCheck {
    bool positive_definite = false;
    std::string diagnostic;
};

/// Exact leading-minors test. Throws InvalidInput for non-square or asymmetric input.
SpdCheck spd_check(const RationalMatrix& R);
/// Cholesky with pivot threshold 1e-10 * max|R_ij|. Throws InvalidInput for non-square or asymmetric input.
SpdCheck spd_check(const RealMatrix& R);

enum class EvaluationPath { exact, quadrature };
std::string_view to_string(EvaluationPath path);

/*
 * Lower bound, energy and their difference for one configuration. On the
 * exact path gap >= 0 holds exactly; on the quadrature path gap may dip to
 * -1e-9 * max(1, energy) from rounding, anything lower is an error.
 */
template <class T>
struct BoundResult {
    T bound{};
    T energy{};
    T gap{};
    unsigned degree = 0;
    unsigned weight = 0;
    Interval interval;
    Anchor orientation = Anchor::left;
    EvaluationPath path = EvaluationPath::exact;
};

using ExactBound = BoundResult<Rational>;
using RealBound = BoundResult<double>;

/// Fᵀ (Xi ⊗ R) F
template <class T>
T xi_form_value(const MomentVector<T>& f, const Matrix<T>& xi, const Matrix<T>& R) {
    const Matrix<T> k = kron(xi, R);
    return k.quadratic(f.entries);
}

/// Σ_k chi_k⁻¹ π_kᵀ R π_k
template <class T>
T pi_form_value(const ProjectionVector<T>& pi, std::span<const T> inv_chi, const Matrix<T>& R) {
    T acc(0);
    for (std::size_t k = 0; k < pi.blocks; ++k) acc += inv_chi[k] * R.quadratic(pi.block(k));
    return acc;
}

ExactBound bound_xi_form(const PolynomialSignal& w, const RationalMatrix& R, const BasisConfig& cfg);
RealBound bound_xi_form(const Signal& w, const RealMatrix& R, const BasisConfig& cfg, const QuadratureConfig& q);

ExactBound bound_pi_form(const PolynomialSignal& w, const RationalMatrix& R, const WopBasis& basis);
RealBound bound_pi_form(const Signal& w, const RealMatrix& R, const WopBasis& basis, const QuadratureConfig& q);

/// Bound from ẇ data only: endpoint values of w and its plain moments (see derivative_moments).
Rational derivative_bound(const PolynomialSignal& w, const RationalMatrix& R, const BasisConfig& cfg);

/// Bounds for N = first..last on one basis. Verifies monotonicity and that each
/// increment equals chi⁻¹ πᵀ R π of the added polynomial; throws InternalConsistencyError otherwise.
std::vector<ExactBound> tightness_sweep(const PolynomialSignal& w, const RationalMatrix& R, unsigned m,
                                        Anchor orientation, unsigned first, unsigned last, Caps caps = {});
std::vector<RealBound> tightness_sweep(const Signal& w, const RealMatrix& R, unsigned m, Anchor orientation,
                                       unsigned first, unsigned last, const QuadratureConfig& q, Caps caps = {});

/// z = w - Σ chi_k⁻¹ p_k π_k, the part of w orthogonal to the degree-N polynomials.
PolynomialSignal residual_signal(const PolynomialSignal& w, const WopBasis& basis);

}  // namespace wop
