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

#include "wop/signal.hpp"

#include "wop/errors.hpp"

namespace wop {

PolynomialSignal::PolynomialSignal(Interval interval, std::vector<ShiftedPolynomial> components)
    : interval_(std::move(interval)), components_(std::move(components)) {
    if (components_.empty()) throw InvalidInput("signal needs at least one component");
    for (const auto& c : components_)
        if (c.anchor() != components_.front().anchor())
            throw InvalidInput("signal components must share one anchor");
}

int PolynomialSignal::max_degree() const {
    int d = -1;
    for (const auto& c : components_)
        if (!c.is_zero()) d = std::max(d, static_cast<int>(c.degree()));
    return d;
}

std::vector<Rational> PolynomialSignal::at(const Rational& s) const {
    std::vector<Rational> out;
    out.reserve(dim());
    for (const auto& c : components_) out.push_back(evaluate(c, s, interval_));
    return out;
}

std::vector<double> PolynomialSignal::at(double s) const {
    std::vector<double> out;
    out.reserve(dim());
    for (const auto& c : components_) out.push_back(evaluate(c, s, interval_));
    return out;
}

PolynomialSignal PolynomialSignal::derivative() const {
    std::vector<ShiftedPolynomial> d;
    d.reserve(dim());
    for (const auto& c : components_) d.push_back(differentiate(c));
    return PolynomialSignal(interval_, std::move(d));
}

PolynomialSignal PolynomialSignal::scaled(const Rational& c) const {
    std::vector<ShiftedPolynomial> out;
    out.reserve(dim());
    for (const auto& p : components_) out.push_back(c * p);
    return PolynomialSignal(interval_, std::move(out));
}

PolynomialSignal PolynomialSignal::rebased(Anchor target) const {
    std::vector<ShiftedPolynomial> out;
    out.reserve(dim());
    for (const auto& p : components_) out.push_back(rebase(p, target, interval_));
    return PolynomialSignal(interval_, std::move(out));
}

PolynomialSignal PolynomialSignal::translated(const Rational& t) const {
    // Shifted coefficients are translation invariant: (s - (a+t)) at s+t equals (s - a) at s.
    return PolynomialSignal(interval_.shifted(t), components_);
}

PolynomialSignal PolynomialSignal::reflected() const {
    std::vector<ShiftedPolynomial> out;
    out.reserve(dim());
    for (const auto& p : components_) out.push_back(reflect(p));
    return PolynomialSignal(interval_, std::move(out));
}

namespace {

PolynomialSignal combine(const PolynomialSignal& u, const PolynomialSignal& v, const Rational& sign) {
    if (!(u.interval() == v.interval()) || u.dim() != v.dim())
        throw InvalidInput("signals differ in interval or dimension");
    std::vector<ShiftedPolynomial> out;
    out.reserve(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        const ShiftedPolynomial vi = rebase(v.component(i), u.component(i).anchor(), u.interval());
        out.push_back(u.component(i) + sign * vi);
    }
    return PolynomialSignal(u.interval(), std::move(out));
}

}  // namespace

PolynomialSignal operator+(const PolynomialSignal& u, const PolynomialSignal& v) { return combine(u, v, Rational(1)); }

PolynomialSignal operator-(const PolynomialSignal& u, const PolynomialSignal& v) { return combine(u, v, Rational(-1)); }

Signal::Signal(BlackBoxSignal s) : v_(std::move(s)) {
    const auto& b = std::get<BlackBoxSignal>(v_);
    if (b.dim == 0) throw InvalidInput("signal needs at least one component");
    if (!b.value) throw InvalidInput("black-box signal needs an evaluator");
}

const Interval& Signal::interval() const {
    return std::visit([](const auto& s) -> const Interval& {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, PolynomialSignal>)
            return s.interval();
        else
            return s.interval;
    }, v_);
}

std::size_t Signal::dim() const {
    if (is_polynomial()) return polynomial().dim();
    return std::get<BlackBoxSignal>(v_).dim;
}

std::vector<double> Signal::at(double s) const {
    if (is_polynomial()) return polynomial().at(s);
    const auto& b = std::get<BlackBoxSignal>(v_);
    auto out = b.value(s);
    if (out.size() != b.dim) throw InvalidInput("black-box evaluator returned the wrong dimension");
    return out;
}

bool Signal::has_derivative() const {
    return is_polynomial() || static_cast<bool>(std::get<BlackBoxSignal>(v_).derivative);
}

std::vector<double> Signal::derivative_at(double s) const {
    if (is_polynomial()) return polynomial().derivative().at(s);
    const auto& b = std::get<BlackBoxSignal>(v_);
    if (!b.derivative) throw InvalidInput("signal has no derivative evaluator");
    auto out = b.derivative(s);
    if (out.size() != b.dim) throw InvalidInput("black-box derivative returned the wrong dimension");
    return out;
}

Signal Signal::derivative() const {
    if (is_polynomial()) return Signal(polynomial().derivative());
    const auto& b = std::get<BlackBoxSignal>(v_);
    if (!b.derivative) throw InvalidInput("signal has no derivative evaluator");
    return Signal(BlackBoxSignal{b.interval, b.dim, b.derivative, {}});
}

}  // namespace wop
