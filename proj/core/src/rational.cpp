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

#include "wop/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "wop/errors.hpp"

namespace wop {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw InvalidInput("rational with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw InvalidInput("malformed rational \"" + std::string(text) + "\"");

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InvalidInput("rational with zero denominator \"" + std::string(text) + "\"");
    if (negative) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw InvalidInput("non-finite value cannot be made rational");
    return Rational(mpq_class(value));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw InvalidInput("division by zero");
    q_ /= rhs.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(mpq_class(c));
}

}  // namespace wop
