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

#include <vector>

#include "wop/matrix.hpp"
#include "wop/polynomial.hpp"

namespace wop {

/// Upper limits on degree and weight exponent; they bound rational coefficient growth.
struct Caps {
    unsigned max_degree = 10;
    unsigned max_weight = 12;
};

/*
 * Configuration of a weighted orthogonal family on [a, b]:
 *  - weight exponent m: weight (s-a)^m, or (b-s)^m with a right orientation;
 *  - degree N: the family is p_0 .. p_N;
 *  - orientation: also selects the monomials f_k = (s-a)^k or (b-s)^k.
 */
struct BasisConfig {
    Interval interval;
    unsigned weight = 0;
    unsigned degree = 0;
    Anchor orientation = Anchor::left;
    Caps caps{};

    /// Throws InvalidInput when a cap is exceeded.
    void validate() const;
    ShiftedPolynomial weight_function() const { return ShiftedPolynomial::monomial(weight, orientation); }
    ShiftedPolynomial monomial(unsigned k) const { return ShiftedPolynomial::monomial(k, orientation); }
};

/*
 * Monic orthogonal polynomials p_0..p_N under the weighted inner product,
 * with their squared norms chi_k, the projection table g(i, j) = (f_i, p_j)
 * for j <= i, and the unit lower-triangular G with F = G P.
 */
class WopBasis {
public:
    const BasisConfig& config() const { return config_; }
    unsigned degree() const { return config_.degree; }

    const std::vector<ShiftedPolynomial>& polys() const { return polys_; }
    const ShiftedPolynomial& poly(unsigned k) const { return polys_.at(k); }
    const std::vector<Rational>& chi() const { return chi_; }
    /// (f_i, p_j) for j <= i.
    const Rational& g(unsigned i, unsigned j) const { return g_.at(i).at(j); }
    const RationalMatrix& G() const { return G_; }

    /// Row k holds the coefficients of p_k in the orientation's shifted basis.
    RationalMatrix coefficient_matrix() const;

private:
    friend WopBasis gram_schmidt(const BasisConfig& cfg);
    explicit WopBasis(BasisConfig cfg) : config_(std::move(cfg)) {}

    BasisConfig config_;
    std::vector<ShiftedPolynomial> polys_;
    std::vector<Rational> chi_;
    std::vector<std::vector<Rational>> g_;
    RationalMatrix G_;
};

/// Exact weighted inner product (p, q) over cfg.interval with cfg's weight and orientation.
Rational inner_product(const ShiftedPolynomial& p, const ShiftedPolynomial& q, const BasisConfig& cfg);

/// Classical Gram-Schmidt over the shifted monomials, in exact arithmetic.
WopBasis gram_schmidt(const BasisConfig& cfg);

/// Unit lower-triangular G with entry (i, j) = g(i, j) / chi_j below the diagonal.
RationalMatrix assemble_G(const WopBasis& basis);

struct BoundMatrices {
    RationalMatrix Ginv;
    RationalMatrix LambdaInv;  // diag(1 / chi_k)
    RationalMatrix Xi;         // Ginvᵀ LambdaInv Ginv
};

BoundMatrices assemble_bound_matrices(const WopBasis& basis);

/// Legendre polynomial of degree k mapped affinely onto [-h, 0], built by the
/// three-term recurrence; left-anchored at -h. Independent of gram_schmidt.
ShiftedPolynomial legendre_oracle(unsigned k, const Rational& h);

}  // namespace wop
