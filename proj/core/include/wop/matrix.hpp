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
#include <string>
#include <utility>
#include <vector>

#include "wop/errors.hpp"
#include "wop/rational.hpp"

namespace wop {

/*
 * Dense row-major matrix over an exact or floating scalar field.
 * Instantiated as RationalMatrix for the exact path and RealMatrix for
 * the quadrature path. Dimensions are fixed at construction.
 */
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw InvalidInput("matrix entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(std::span<const T> d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    /// Builds from nested rows; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) throw InvalidInput("matrix needs at least one row");
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw InvalidInput("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::span<const T> entries() const { return a_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw InvalidInput("matrix product shape mismatch");
        Matrix p(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == T(0)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += xik * y(k, j);
            }
        return p;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.require_same_shape(y);
        Matrix s = x;
        for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += y.a_[i];
        return s;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.require_same_shape(y);
        Matrix s = x;
        for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] -= y.a_[i];
        return s;
    }

    friend Matrix operator*(const T& c, const Matrix& x) {
        Matrix s = x;
        for (auto& e : s.a_) e *= c;
        return s;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    /// y = A x
    std::vector<T> apply(std::span<const T> x) const {
        if (x.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    /// xᵀ A y
    T bilinear(std::span<const T> x, std::span<const T> y) const {
        if (x.size() != rows_ || y.size() != cols_) throw InvalidInput("bilinear form shape mismatch");
        T acc(0);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (x[i] == T(0)) continue;
            T row(0);
            for (std::size_t j = 0; j < cols_; ++j) row += (*this)(i, j) * y[j];
            acc += x[i] * row;
        }
        return acc;
    }

    T quadratic(std::span<const T> x) const { return bilinear(x, x); }

private:
    void require_same_shape(const Matrix& y) const {
        if (rows_ != y.rows_ || cols_ != y.cols_) throw InvalidInput("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

/// Block Kronecker product: block (i, j) of the result is a(i, j) * b.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T& aij = a(i, j);
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return k;
}

bool is_unit_lower_triangular(const RationalMatrix& m);

/// Exact inverse by forward substitution. Throws InvalidInput unless m is unit lower triangular.
RationalMatrix invert_unit_lower(const RationalMatrix& m);

/// Exact leading principal minors det(M[0..k, 0..k]) for k = 0..n-1.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

RealMatrix to_real(const RationalMatrix& m);

}  // namespace wop
