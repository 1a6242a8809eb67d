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

#include <cstddef>
#include <span>
#include <vector>

#include "wop/basis.hpp"
#include "wop/quadrature.hpp"
#include "wop/signal.hpp"

namespace wop {

struct MomentTag {};
struct ProjectionTag {};

/*
 * Stacked n-vectors, one block per polynomial index k, in the layout of
 * F(s) ⊗ w(s): entry (k, i) sits at k * dim + i.
 *
 * For a MomentVector block k is the integral of weight(s) f_k(s) w(s); for
 * a ProjectionVector it is the integral of weight(s) p_k(s) w(s).
 */
template <class T, class Tag>
struct BlockVector {
    std::size_t blocks = 0;
    std::size_t dim = 0;
    unsigned weight = 0;
    Anchor orientation = Anchor::left;
    std::vector<T> entries;

    BlockVector() = default;
    BlockVector(std::size_t blocks_, std::size_t dim_, unsigned weight_, Anchor orientation_)
        : blocks(blocks_), dim(dim_), weight(weight_), orientation(orientation_), entries(blocks_ * dim_, T(0)) {}

    std::span<const T> block(std::size_t k) const { return std::span<const T>(entries).subspan(k * dim, dim); }
    std::span<T> block(std::size_t k) { return std::span<T>(entries).subspan(k * dim, dim); }
    T& at(std::size_t k, std::size_t i) { return entries[k * dim + i]; }
    const T& at(std::size_t k, std::size_t i) const { return entries[k * dim + i]; }

    friend bool operator==(const BlockVector&, const BlockVector&) = default;
};

template <class T>
using MomentVector = BlockVector<T, MomentTag>;
template <class T>
using ProjectionVector = BlockVector<T, ProjectionTag>;

// ---- moments ---------------------------------------------------------------

/// Exact moments of a polynomial signal under cfg's weight, degree and orientation.
MomentVector<Rational> moments(const PolynomialSignal& w, const BasisConfig& cfg);

/// Moments by composite Gauss-Legendre quadrature; polynomial signals are evaluated in double.
MomentVector<double> moments(const Signal& w, const BasisConfig& cfg, const QuadratureConfig& q);

// ---- projections -----------------------------------------------------------

/// Exact projections, computed by direct integration against p_k and reconciled
/// against (Ginv ⊗ I) F. Throws InternalConsistencyError on any difference.
ProjectionVector<Rational> projections(const PolynomialSignal& w, const WopBasis& basis);

/// Quadrature projections with the same two-route reconciliation, within
/// 10x the quadrature tolerance relative to the absolute-value scale of the
/// contributing integrals.
ProjectionVector<double> projections(const Signal& w, const WopBasis& basis, const QuadratureConfig& q);

/// (Ginv ⊗ I_n) F
template <class T>
ProjectionVector<T> project_moments(const MomentVector<T>& f, const Matrix<T>& ginv) {
    ProjectionVector<T> pi(f.blocks, f.dim, f.weight, f.orientation);
    for (std::size_t k = 0; k < f.blocks; ++k)
        for (std::size_t j = 0; j <= k; ++j) {
            const T& g = ginv(k, j);
            if (g == T(0)) continue;
            for (std::size_t i = 0; i < f.dim; ++i) pi.at(k, i) += g * f.at(j, i);
        }
    return pi;
}

// ---- energies --------------------------------------------------------------

/// Integral of weight(s) w(s)ᵀ R w(s), weight (s-a)^m or (b-s)^m.
Rational energy(const PolynomialSignal& w, const RationalMatrix& R, unsigned m, Anchor orientation = Anchor::left);
double energy(const Signal& w, const RealMatrix& R, unsigned m, Anchor orientation, const QuadratureConfig& q);

/// m-fold nested integral of wᵀRw by literal repeated tail integration.
Rational nested_energy_oracle(const PolynomialSignal& w, const RationalMatrix& R, unsigned m);

/// The m-fold nested integral of w (one value per component).
std::vector<Rational> nested_moment(const PolynomialSignal& w, unsigned m);

// ---- derivative signals ----------------------------------------------------

/*
 * Moments of ẇ under cfg, from endpoint values of w and its plain moments
 * (weight 0, same orientation) of degrees 0 .. m+N-1, by integration by parts:
 *   left:  ∫ (s-a)^j ẇ = h^j w(b) - j ∫ (s-a)^(j-1) w,  j >= 1
 *   right: ∫ (b-s)^j ẇ = -h^j w(a) + j ∫ (b-s)^(j-1) w, j >= 1
 *   j = 0: w(b) - w(a)
 */
template <class T>
MomentVector<T> derivative_moments(std::span<const T> w_a, std::span<const T> w_b, const MomentVector<T>& lower,
                                   const BasisConfig& cfg, const T& length) {
    const std::size_t n = w_a.size();
    if (w_b.size() != n || lower.dim != n) throw InvalidInput("derivative_moments: dimension mismatch");
    if (lower.weight != 0 || lower.orientation != cfg.orientation)
        throw InvalidInput("derivative_moments: lower moments must be unweighted and share the orientation");
    const std::size_t needed = cfg.weight + cfg.degree;  // degrees 0 .. m+N-1
    if (lower.blocks < needed) throw InvalidInput("derivative_moments: not enough lower moments");

    MomentVector<T> out(cfg.degree + 1, n, cfg.weight, cfg.orientation);
    for (std::size_t k = 0; k <= cfg.degree; ++k) {
        const std::size_t j = cfg.weight + k;
        if (j == 0) {
            for (std::size_t i = 0; i < n; ++i) out.at(k, i) = w_b[i] - w_a[i];
            continue;
        }
        T hj(1);
        for (std::size_t e = 0; e < j; ++e) hj *= length;
        const T jj(static_cast<long>(j));
        for (std::size_t i = 0; i < n; ++i) {
            if (cfg.orientation == Anchor::left)
                out.at(k, i) = hj * w_b[i] - jj * lower.at(j - 1, i);
            else
                out.at(k, i) = jj * lower.at(j - 1, i) - hj * w_a[i];
        }
    }
    return out;
}

/// Exact convenience overload taking the lower moments from w itself.
MomentVector<Rational> derivative_moments(const PolynomialSignal& w, const BasisConfig& cfg);

}  // namespace wop
