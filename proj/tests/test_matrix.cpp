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

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wop/bound.hpp"
#include "wop/errors.hpp"
#include "wop/matrix.hpp"
#include "wop/random.hpp"

using namespace wop;
using namespace wop::testing;

namespace {

RationalMatrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.push_back(Qs(row));
    return RationalMatrix::from_rows(r);
}

}  // namespace

TEST(Matrix, InvertUnitLower) {
    EXPECT_EQ(invert_unit_lower(RationalMatrix::identity(3)), RationalMatrix::identity(3));
    const auto g = M({{"1", "0", "0"}, {"1/2", "1", "0"}, {"1/3", "1", "1"}});
    const auto expected = M({{"1", "0", "0"}, {"-1/2", "1", "0"}, {"1/6", "-1", "1"}});
    EXPECT_EQ(invert_unit_lower(g), expected);
    EXPECT_EQ(g * expected, RationalMatrix::identity(3));
    EXPECT_THROW(invert_unit_lower(M({{"2", "0"}, {"0", "1"}})), InvalidInput);
    EXPECT_THROW(invert_unit_lower(M({{"1", "1"}, {"0", "1"}})), InvalidInput);
}

TEST(Matrix, InvertRandomUnitLower) {
    for (std::uint64_t t = 0; t < 30; ++t) {
        TrialRng rng(kDefaultSeed, t);
        const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
        RationalMatrix g = RationalMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) g(i, j) = rng.rational(9, 7);
        const auto inv = invert_unit_lower(g);
        EXPECT_EQ(inv * g, RationalMatrix::identity(n));
        EXPECT_EQ(g * inv, RationalMatrix::identity(n));
    }
}

TEST(Matrix, Kron) {
    EXPECT_EQ(kron(RationalMatrix::identity(2), RationalMatrix::identity(3)), RationalMatrix::identity(6));
    const auto b = M({{"1", "2"}, {"3/4", "-1"}});
    EXPECT_EQ(kron(M({{"2"}}), b), Rational(2) * b);
    const auto k = kron(M({{"1", "2"}, {"0", "1"}}), b);
    EXPECT_EQ(k(0, 2), Q(2));
    EXPECT_EQ(k(1, 3), Q(-2));
    EXPECT_EQ(k(3, 3), Q(-1));
    EXPECT_EQ(k(2, 0), Q(0));
}

TEST(Matrix, KronMixedProduct) {
    for (std::uint64_t t = 0; t < 20; ++t) {
        TrialRng rng(kDefaultSeed, t);
        auto draw = [&] {
            RationalMatrix m(2, 2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) m(i, j) = rng.rational(7, 5);
            return m;
        };
        const auto A = draw(), B = draw(), C = draw(), D = draw();
        EXPECT_EQ(kron(A, B) * kron(C, D), kron(A * C, B * D));
    }
}

TEST(Matrix, LeadingMinors) {
    const auto minors = leading_principal_minors(M({{"2", "1"}, {"1", "2"}}));
    ASSERT_EQ(minors.size(), 2u);
    EXPECT_EQ(minors[0], Q(2));
    EXPECT_EQ(minors[1], Q(3));
    const auto z = leading_principal_minors(M({{"0", "1"}, {"1", "0"}}));
    EXPECT_EQ(z[0], Q(0));
    EXPECT_EQ(z[1], Q(-1));
}

TEST(SpdCheck, ExactMinorsTest) {
    EXPECT_TRUE(spd_check(RationalMatrix::identity(3)).positive_definite);
    EXPECT_FALSE(spd_check(M({{"1", "2"}, {"2", "1"}})).positive_definite);
    EXPECT_FALSE(spd_check(M({{"0"}})).positive_definite);
    EXPECT_THROW(spd_check(M({{"1", "2"}, {"0", "1"}})), InvalidInput);
    EXPECT_THROW(spd_check(M({{"1", "2"}})), InvalidInput);
}

TEST(SpdCheck, FloatCholesky) {
    EXPECT_TRUE(spd_check(RealMatrix::identity(2)).positive_definite);
    EXPECT_FALSE(spd_check(RealMatrix::from_rows({{1.0, 2.0}, {2.0, 1.0}})).positive_definite);
    EXPECT_FALSE(spd_check(RealMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}})).positive_definite);
    EXPECT_THROW(spd_check(RealMatrix::from_rows({{1.0, 0.5}, {0.0, 1.0}})), InvalidInput);
}

TEST(SpdCheck, RandomSpdIsPositiveDefinite) {
    for (std::uint64_t t = 0; t < 20; ++t) {
        TrialRng rng(kDefaultSeed, t);
        const auto R = random_spd(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
        EXPECT_TRUE(R.is_symmetric());
        EXPECT_TRUE(spd_check(R).positive_definite);
    }
}
