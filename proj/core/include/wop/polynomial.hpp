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
#include <string_view>
#include <vector>

#include "wop/rational.hpp"

namespace wop {

/// Closed interval [a, b] with a < b.
class Interval {
public:
    Interval(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    Rational length() const { return b_ - a_; }

    /// [a + t, b + t]
    Interval shifted(const Rational& t) const { return Interval(a_ + t, b_ + t); }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational a_;
    Rational b_;
};

/// Which endpoint the shifted monomials hang from: (s-a)^k or (b-s)^k.
enum class Anchor { left, right };

std::string_view to_string(Anchor anchor);
Anchor opposite(Anchor anchor);

/*
 * Exact polynomial in a shifted monomial basis. coefficient(k) multiplies
 * (s-a)^k for a left anchor and (b-s)^k for a right anchor. The interval
 * itself is not stored; evaluation and rebasing take it explicitly.
 *
 * Trailing zero coefficients are always trimmed, so the zero polynomial
 * has an empty coefficient list and equality is coefficient-wise.
 */
class ShiftedPolynomial {
public:
    ShiftedPolynomial() = default;
    explicit ShiftedPolynomial(Anchor anchor) : anchor_(anchor) {}
    ShiftedPolynomial(Anchor anchor, std::vector<Rational> coefficients);

    static ShiftedPolynomial constant(const Rational& c, Anchor anchor = Anchor::left);
    /// The shifted monomial (s-a)^k or (b-s)^k.
    static ShiftedPolynomial monomial(unsigned k, Anchor anchor = Anchor::left);

    Anchor anchor() const { return anchor_; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    bool is_zero() const { return c_.empty(); }
    /// Degree; undefined for the zero polynomial (throws InvalidInput).
    std::size_t degree() const;
    Rational leading_coefficient() const;

    friend bool operator==(const ShiftedPolynomial&, const ShiftedPolynomial&) = default;

private:
    void trim();

    Anchor anchor_ = Anchor::left;
    std::vector<Rational> c_;
};

// Arithmetic. Binary operations require a shared anchor and throw InvalidInput otherwise.
ShiftedPolynomial operator+(const ShiftedPolynomial& p, const ShiftedPolynomial& q);
ShiftedPolynomial operator-(const ShiftedPolynomial& p, const ShiftedPolynomial& q);
ShiftedPolynomial operator*(const ShiftedPolynomial& p, const ShiftedPolynomial& q);
ShiftedPolynomial operator*(const Rational& c, const ShiftedPolynomial& p);
ShiftedPolynomial operator-(const ShiftedPolynomial& p);

/// Horner evaluation in the shifted variable at the point s.
Rational evaluate(const ShiftedPolynomial& p, const Rational& s, const Interval& iv);
double evaluate(const ShiftedPolynomial& p, double s, const Interval& iv);

ShiftedPolynomial differentiate(const ShiftedPolynomial& p);

/// Re-expands the same function in the other shifted basis using (s-a) = (b-a) - (b-s).
ShiftedPolynomial rebase(const ShiftedPolynomial& p, Anchor target, const Interval& iv);

/// Same coefficients read in the opposite basis, i.e. the composition p(a+b-s).
ShiftedPolynomial reflect(const ShiftedPolynomial& p);

/// Exact value of the integral over [a, b] of (s-a)^m p(s), or (b-s)^m p(s) for a right weight.
Rational integrate_weighted(const ShiftedPolynomial& p, unsigned m, const Interval& iv,
                            Anchor weight = Anchor::left);

/// The function theta -> integral from theta to b of p, returned right-anchored.
ShiftedPolynomial tail_integral(const ShiftedPolynomial& p, const Interval& iv);

}  // namespace wop
