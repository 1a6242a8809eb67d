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

#include "wop/polynomial.hpp"

#include <algorithm>

#include "wop/errors.hpp"

namespace wop {

Interval::Interval(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (!(a_ < b_)) throw InvalidInput("invalid interval: need a < b, got [" + a_.str() + ", " + b_.str() + "]");
}

std::string_view to_string(Anchor anchor) { return anchor == Anchor::left ? "left" : "right"; }

Anchor opposite(Anchor anchor) { return anchor == Anchor::left ? Anchor::right : Anchor::left; }

ShiftedPolynomial::ShiftedPolynomial(Anchor anchor, std::vector<Rational> coefficients)
    : anchor_(anchor), c_(std::move(coefficients)) {
    trim();
}

ShiftedPolynomial ShiftedPolynomial::constant(const Rational& c, Anchor anchor) {
    return ShiftedPolynomial(anchor, {c});
}

ShiftedPolynomial ShiftedPolynomial::monomial(unsigned k, Anchor anchor) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = Rational(1);
    return ShiftedPolynomial(anchor, std::move(c));
}

std::size_t ShiftedPolynomial::degree() const {
    if (c_.empty()) throw InvalidInput("degree of the zero polynomial is undefined");
    return c_.size() - 1;
}

Rational ShiftedPolynomial::leading_coefficient() const {
    if (c_.empty()) throw InvalidInput("zero polynomial has no leading coefficient");
    return c_.back();
}

void ShiftedPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

namespace {

void require_same_anchor(const ShiftedPolynomial& p, const ShiftedPolynomial& q) {
    if (p.anchor() != q.anchor())
        throw InvalidInput("polynomial anchor mismatch: " + std::string(to_string(p.anchor())) + " vs " +
                           std::string(to_string(q.anchor())));
}

}  // namespace

ShiftedPolynomial operator+(const ShiftedPolynomial& p, const ShiftedPolynomial& q) {
    require_same_anchor(p, q);
    std::vector<Rational> c(std::max(p.coefficients().size(), q.coefficients().size()), Rational(0));
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) c[k] += p.coefficients()[k];
    for (std::size_t k = 0; k < q.coefficients().size(); ++k) c[k] += q.coefficients()[k];
    return ShiftedPolynomial(p.anchor(), std::move(c));
}

ShiftedPolynomial operator-(const ShiftedPolynomial& p) { return Rational(-1) * p; }

ShiftedPolynomial operator-(const ShiftedPolynomial& p, const ShiftedPolynomial& q) { return p + (-q); }

ShiftedPolynomial operator*(const ShiftedPolynomial& p, const ShiftedPolynomial& q) {
    require_same_anchor(p, q);
    if (p.is_zero() || q.is_zero()) return ShiftedPolynomial(p.anchor());
    const auto& pc = p.coefficients();
    const auto& qc = q.coefficients();
    std::vector<Rational> c(pc.size() + qc.size() - 1, Rational(0));
    for (std::size_t i = 0; i < pc.size(); ++i) {
        if (pc[i].is_zero()) continue;
        for (std::size_t j = 0; j < qc.size(); ++j) c[i + j] += pc[i] * qc[j];
    }
    return ShiftedPolynomial(p.anchor(), std::move(c));
}

ShiftedPolynomial operator*(const Rational& c, const ShiftedPolynomial& p) {
    std::vector<Rational> out = p.coefficients();
    for (auto& x : out) x *= c;
    return ShiftedPolynomial(p.anchor(), std::move(out));
}

Rational evaluate(const ShiftedPolynomial& p, const Rational& s, const Interval& iv) {
    const Rational x = p.anchor() == Anchor::left ? s - iv.a() : iv.b() - s;
    Rational acc(0);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double evaluate(const ShiftedPolynomial& p, double s, const Interval& iv) {
    const double x = p.anchor() == Anchor::left ? s - iv.a().to_double() : iv.b().to_double() - s;
    double acc = 0.0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

ShiftedPolynomial differentiate(const ShiftedPolynomial& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return ShiftedPolynomial(p.anchor());
    // d/ds (b-s)^k = -k (b-s)^(k-1)
    const Rational sign(p.anchor() == Anchor::left ? 1 : -1);
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = sign * Rational(static_cast<long>(k)) * c[k];
    return ShiftedPolynomial(p.anchor(), std::move(d));
}

ShiftedPolynomial rebase(const ShiftedPolynomial& p, Anchor target, const Interval& iv) {
    if (p.anchor() == target) return p;
    // x^k = (h - y)^k = sum_j C(k,j) h^(k-j) (-1)^j y^j, symmetric in both directions.
    const auto& c = p.coefficients();
    const Rational h = iv.length();
    std::vector<Rational> hp(c.size(), Rational(1));
    for (std::size_t k = 1; k < c.size(); ++k) hp[k] = hp[k - 1] * h;
    std::vector<Rational> out(c.size(), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        for (std::size_t j = 0; j <= k; ++j) {
            Rational term = c[k] * binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * hp[k - j];
            if (j % 2 == 1) term = -term;
            out[j] += term;
        }
    }
    return ShiftedPolynomial(target, std::move(out));
}

ShiftedPolynomial reflect(const ShiftedPolynomial& p) {
    return ShiftedPolynomial(opposite(p.anchor()), p.coefficients());
}

Rational integrate_weighted(const ShiftedPolynomial& p, unsigned m, const Interval& iv, Anchor weight) {
    // With both weight and p in the same shifted variable x in [0, h]:
    // integral of x^(m+k) = h^(m+k+1) / (m+k+1).
    const ShiftedPolynomial q = rebase(p, weight, iv);
    const Rational h = iv.length();
    Rational hp = h.pow(m + 1);
    Rational acc(0);
    for (std::size_t k = 0; k < q.coefficients().size(); ++k) {
        const auto& ck = q.coefficients()[k];
        if (!ck.is_zero()) acc += ck * hp / Rational(static_cast<long>(m + k + 1));
        hp *= h;
    }
    return acc;
}

ShiftedPolynomial tail_integral(const ShiftedPolynomial& p, const Interval& iv) {
    // integral from theta to b of (b-s)^k ds = (b-theta)^(k+1) / (k+1)
    const ShiftedPolynomial q = rebase(p, Anchor::right, iv);
    std::vector<Rational> out(q.coefficients().size() + 1, Rational(0));
    for (std::size_t k = 0; k < q.coefficients().size(); ++k)
        out[k + 1] = q.coefficients()[k] / Rational(static_cast<long>(k + 1));
    return ShiftedPolynomial(Anchor::right, std::move(out));
}

}  // namespace wop
