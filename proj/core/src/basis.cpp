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

#include "wop/basis.hpp"

#include <string>

#include "wop/errors.hpp"

namespace wop {

void BasisConfig::validate() const {
    if (degree > caps.max_degree)
        throw InvalidInput("degree N = " + std::to_string(degree) + " exceeds cap " + std::to_string(caps.max_degree));
    if (weight > caps.max_weight)
        throw InvalidInput("weight exponent m = " + std::to_string(weight) + " exceeds cap " +
                           std::to_string(caps.max_weight));
}

Rational inner_product(const ShiftedPolynomial& p, const ShiftedPolynomial& q, const BasisConfig& cfg) {
    const auto& iv = cfg.interval;
    const ShiftedPolynomial pp = rebase(p, cfg.orientation, iv);
    const ShiftedPolynomial qq = rebase(q, cfg.orientation, iv);
    return integrate_weighted(pp * qq, cfg.weight, iv, cfg.orientation);
}

RationalMatrix WopBasis::coefficient_matrix() const {
    const std::size_t n = polys_.size();
    RationalMatrix c(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j) c(k, j) = polys_[k].coefficient(j);
    return c;
}

WopBasis gram_schmidt(const BasisConfig& cfg) {
    cfg.validate();
    // The right orientation is the left one under s -> a + b - s, which maps
    // (s-a)^k to (b-s)^k and [a, b] onto itself. Build left, relabel after.
    BasisConfig left = cfg;
    left.orientation = Anchor::left;

    WopBasis basis(cfg);
    const unsigned n = cfg.degree;
    basis.polys_.reserve(n + 1);
    basis.chi_.reserve(n + 1);
    basis.g_.resize(n + 1);

    for (unsigned i = 0; i <= n; ++i) {
        const ShiftedPolynomial f = left.monomial(i);
        ShiftedPolynomial p = f;
        for (unsigned j = 0; j < i; ++j) {
            const Rational gij = inner_product(f, basis.polys_[j], left);
            basis.g_[i].push_back(gij);
            p = p - (gij / basis.chi_[j]) * basis.polys_[j];
        }
        const Rational chi = inner_product(p, p, left);
        if (chi.sign() <= 0)
            throw InternalConsistencyError("gram_schmidt: non-positive squared norm at k = " + std::to_string(i));
        // g(i, i) = (f_i, p_i) = (p_i, p_i) since f_i - p_i lies in span{p_0..p_(i-1)}.
        basis.g_[i].push_back(chi);
        basis.chi_.push_back(chi);
        basis.polys_.push_back(std::move(p));
    }

    if (cfg.orientation == Anchor::right)
        for (auto& p : basis.polys_) p = reflect(p);

    basis.G_ = assemble_G(basis);
    return basis;
}

RationalMatrix assemble_G(const WopBasis& basis) {
    const unsigned n = basis.degree();
    RationalMatrix G = RationalMatrix::identity(n + 1);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 0; j < i; ++j) G(i, j) = basis.g(i, j) / basis.chi()[j];
    return G;
}

BoundMatrices assemble_bound_matrices(const WopBasis& basis) {
    BoundMatrices bm;
    bm.Ginv = invert_unit_lower(basis.G());
    std::vector<Rational> inv_chi;
    inv_chi.reserve(basis.chi().size());
    for (const auto& c : basis.chi()) inv_chi.push_back(c.inverse());
    bm.LambdaInv = RationalMatrix::diagonal(inv_chi);
    bm.Xi = bm.Ginv.transpose() * bm.LambdaInv * bm.Ginv;
    return bm;
}

ShiftedPolynomial legendre_oracle(unsigned k, const Rational& h) {
    if (h.sign() <= 0) throw InvalidInput("legendre_oracle: h must be positive");
    // x = 2(s + h)/h - 1 maps [-h, 0] onto [-1, 1]; in the left variable u = s + h.
    const ShiftedPolynomial x(Anchor::left, {Rational(-1), Rational(2) / h});
    ShiftedPolynomial prev = ShiftedPolynomial::constant(Rational(1));
    if (k == 0) return prev;
    ShiftedPolynomial cur = x;
    for (unsigned j = 1; j < k; ++j) {
        // (j+1) L_(j+1) = (2j+1) x L_j - j L_(j-1)
        ShiftedPolynomial next = Rational(static_cast<long>(2 * j + 1), static_cast<long>(j + 1)) * (x * cur) -
                                 Rational(static_cast<long>(j), static_cast<long>(j + 1)) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace wop
