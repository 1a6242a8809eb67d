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
#include <functional>
#include <variant>
#include <vector>

#include "wop/polynomial.hpp"

namespace wop {

/// Vector signal whose components are exact polynomials sharing one anchor.
class PolynomialSignal {
public:
    PolynomialSignal(Interval interval, std::vector<ShiftedPolynomial> components);

    const Interval& interval() const { return interval_; }
    std::size_t dim() const { return components_.size(); }
    const std::vector<ShiftedPolynomial>& components() const { return components_; }
    const ShiftedPolynomial& component(std::size_t i) const { return components_.at(i); }

    /// Largest component degree; -1 when every component is zero.
    int max_degree() const;

    std::vector<Rational> at(const Rational& s) const;
    std::vector<double> at(double s) const;

    PolynomialSignal derivative() const;
    PolynomialSignal scaled(const Rational& c) const;
    PolynomialSignal rebased(Anchor target) const;
    /// The signal s -> w(s - t) on [a + t, b + t].
    PolynomialSignal translated(const Rational& t) const;
    /// The signal s -> w(a + b - s) on the same interval.
    PolynomialSignal reflected() const;

    friend PolynomialSignal operator+(const PolynomialSignal& u, const PolynomialSignal& v);
    friend PolynomialSignal operator-(const PolynomialSignal& u, const PolynomialSignal& v);

private:
    Interval interval_;
    std::vector<ShiftedPolynomial> components_;
};

/*
 * Signal known only through an evaluator. Evaluators must be stateless so
 * they can be called concurrently. The derivative evaluator is optional and
 * only consumed by derivative-signal bounds.
 */
struct BlackBoxSignal {
    using Evaluator = std::function<std::vector<double>(double)>;

    Interval interval;
    std::size_t dim = 1;
    Evaluator value;
    Evaluator derivative;
};

class Signal {
public:
    Signal(PolynomialSignal s) : v_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
    Signal(BlackBoxSignal s);                          // NOLINT(google-explicit-constructor)

    bool is_polynomial() const { return std::holds_alternative<PolynomialSignal>(v_); }
    const PolynomialSignal& polynomial() const { return std::get<PolynomialSignal>(v_); }

    const Interval& interval() const;
    std::size_t dim() const;

    std::vector<double> at(double s) const;
    bool has_derivative() const;
    std::vector<double> derivative_at(double s) const;
    /// Signal of the derivative; throws InvalidInput when none is available.
    Signal derivative() const;

private:
    std::variant<PolynomialSignal, BlackBoxSignal> v_;
};

}  // namespace wop
