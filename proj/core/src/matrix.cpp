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

#include "wop/matrix.hpp"

namespace wop {

bool is_unit_lower_triangular(const RationalMatrix& m) {
    if (!m.is_square()) return false;
    const Rational one(1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i) != one) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    }
    return true;
}

RationalMatrix invert_unit_lower(const RationalMatrix& m) {
    if (!is_unit_lower_triangular(m)) throw InvalidInput("invert_unit_lower: matrix is not unit lower triangular");
    const std::size_t n = m.rows();
    RationalMatrix inv = RationalMatrix::identity(n);
    // Column j of the inverse solves L x = e_j; x is zero above row j.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational acc(0);
            for (std::size_t k = j; k < i; ++k) acc += m(i, k) * inv(k, j);
            inv(i, j) = -acc;
        }
    return inv;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
    if (!m.is_square()) throw InvalidInput("minors need a square matrix");
    const std::size_t n = m.rows();
    // Gaussian elimination without pivoting: the k-th pivot is the ratio of
    // consecutive leading minors. A zero pivot means that minor (and hence
    // definiteness) fails; later minors are computed by a fresh elimination.
    std::vector<Rational> minors;
    minors.reserve(n);
    RationalMatrix u = m;
    Rational det(1);
    std::size_t k = 0;
    for (; k < n; ++k) {
        if (u(k, k).is_zero()) break;
        det *= u(k, k);
        minors.push_back(det);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (u(i, k).is_zero()) continue;
            const Rational f = u(i, k) / u(k, k);
            for (std::size_t j = k; j < n; ++j) u(i, j) -= f * u(k, j);
        }
    }
    for (; k < n; ++k) {
        // Fall back to a pivoted determinant of the leading (k+1)x(k+1) block.
        RationalMatrix b(k + 1, k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= k; ++j) b(i, j) = m(i, j);
        Rational d(1);
        for (std::size_t c = 0; c <= k && !d.is_zero(); ++c) {
            std::size_t p = c;
            while (p <= k && b(p, c).is_zero()) ++p;
            if (p > k) {
                d = Rational(0);
                break;
            }
            if (p != c) {
                for (std::size_t j = 0; j <= k; ++j) std::swap(b(p, j), b(c, j));
                d = -d;
            }
            d *= b(c, c);
            for (std::size_t i = c + 1; i <= k; ++i) {
                if (b(i, c).is_zero()) continue;
                const Rational f = b(i, c) / b(c, c);
                for (std::size_t j = c; j <= k; ++j) b(i, j) -= f * b(c, j);
            }
        }
        minors.push_back(d);
    }
    return minors;
}

RealMatrix to_real(const RationalMatrix& m) {
    RealMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
    return r;
}

}  // namespace wop
