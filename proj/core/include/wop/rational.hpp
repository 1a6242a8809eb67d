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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wop {

/*
 * Arbitrary-precision rational number, always in lowest terms with a
 * positive denominator. Thin value wrapper over GMP's mpq_class so the
 * expression-template machinery never leaks into the public interface.
 *
 * Text form is "p/q", or "p" when the denominator is 1.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Parses "p/q" or "p" with an optional leading '-'. Throws InvalidInput.
    static Rational parse(std::string_view text);
    /// Exact value of a finite double (every finite double is a dyadic rational).
    static Rational from_double(double value);

    std::string str() const;
    double to_double() const { return q_.get_d(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned exponent) const;

    const mpq_class& mpq() const { return q_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.q_)); }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.q_ == rhs.q_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.q_, rhs.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
    mpq_class q_;
};

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

/// Conversions used by code templated over the scalar field.
inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

}  // namespace wop
