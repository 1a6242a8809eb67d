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
#include "wop/errors.hpp"
#include "wop/matrix.hpp"
#include "wop/random.hpp"

using namespace wop;
using namespace wop::testing;

TEST(Rational, ParsesAndPrintsCanonicalForm) {
    EXPECT_EQ(Q("2/4").str(), "1/2");
    EXPECT_EQ(Q("-6/3").str(), "-2");
    EXPECT_EQ(Q("7").str(), "7");
    EXPECT_EQ(Q("0/5").str(), "0");
    EXPECT_THROW(Q("1/0"), InvalidInput);
    EXPECT_THROW(Q("0.5"), InvalidInput);
    EXPECT_THROW(Q(""), InvalidInput);
    EXPECT_THROW(Q("1/2/3"), InvalidInput);
    EXPECT_THROW(Q(1) / Q(0), InvalidInput);
}

TEST(Rational, ArithmeticAndOrdering) {
    EXPECT_EQ(Q("1/2") + Q("1/3"), Q("5/6"));
    EXPECT_EQ(Q("1/2") * Q("-2/3"), Q("-1/3"));
    EXPECT_LT(Q("1/3"), Q("1/2"));
    EXPECT_EQ(Q("-2/3").pow(3), Q("-8/27"));
    EXPECT_EQ(factorial(5), Q(120));
    EXPECT_EQ(binomial(6, 2), Q(15));
    EXPECT_EQ(Rational::from_double(0.375), Q("3/8"));
}

TEST(Interval, RejectsEmptyOrReversed) {
    EXPECT_THROW(Interval(Q(1), Q(0)), InvalidInput);
    EXPECT_THROW(Interval(Q(1), Q(1)), InvalidInput);
    try {
        Interval(Q(1), Q(0));
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("invalid interval"), std::string::npos);
    }
}

TEST(ShiftedPolynomial, MultiplyAddScale) {
    const auto x = ShiftedPolynomial::monomial(1);
    EXPECT_EQ(x * x, ShiftedPolynomial::monomial(2));
    const auto p = L({"1", "-2", "3"});
    EXPECT_EQ(p + ShiftedPolynomial(Anchor::left), p);
    EXPECT_EQ(Q("1/2") * L({"0", "-1", "1"}), L({"0", "-1/2", "1/2"}));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_THROW(p + Rt({"1"}), InvalidInput);
}

TEST(ShiftedPolynomial, TrimsTrailingZeros) {
    const auto p = L({"1", "2", "0", "0"});
    EXPECT_EQ(p.coefficients().size(), 2u);
    EXPECT_EQ(p.degree(), 1u);
    EXPECT_TRUE(L({"0", "0"}).is_zero());
    EXPECT_THROW(ShiftedPolynomial(Anchor::left).degree(), InvalidInput);
}

TEST(ShiftedPolynomial, Evaluate) {
    EXPECT_EQ(evaluate(L({"1"}), Q(7), unit()), Q(1));
    EXPECT_EQ(evaluate(L({"0", "1"}), Q(1), unit()), Q(1));
    EXPECT_EQ(evaluate(L({"1/6", "-1", "1"}), Q("1/2"), unit()), Q("-1/12"));
    // (b - s)^2 at s = 1/4 on [0,1]
    EXPECT_EQ(evaluate(Rt({"0", "0", "1"}), Q("1/4"), unit()), Q("9/16"));
    EXPECT_DOUBLE_EQ(evaluate(L({"1/6", "-1", "1"}), 0.5, unit()), -1.0 / 12.0);
}

TEST(ShiftedPolynomial, IntegrateWeighted) {
    EXPECT_EQ(integrate_weighted(L({"1"}), 0, unit()), Q(1));
    EXPECT_EQ(integrate_weighted(L({"0", "1"}), 0, unit()), Q("1/2"));
    EXPECT_EQ(integrate_weighted(L({"1/6", "-1", "1"}), 0, unit()), Q(0));
    const Interval iv(Q(2), Q(5));
    EXPECT_EQ(integrate_weighted(L({"1"}), 3, iv), Q(81, 4));
    // right weight (b-s)^1 against 1 on [2,5]
    EXPECT_EQ(integrate_weighted(L({"1"}), 1, iv, Anchor::right), Q(9, 2));
    EXPECT_EQ(integrate_weighted(Rt({"0", "1"}), 0, iv), Q(9, 2));
}

TEST(ShiftedPolynomial, Differentiate) {
    EXPECT_TRUE(differentiate(L({"5"})).is_zero());
    EXPECT_EQ(differentiate(ShiftedPolynomial::monomial(2)), L({"0", "2"}));
    EXPECT_EQ(differentiate(ShiftedPolynomial::monomial(3, Anchor::right)), Rt({"0", "0", "-3"}));
}

TEST(ShiftedPolynomial, Rebase) {
    EXPECT_EQ(rebase(L({"1"}), Anchor::right, unit()), Rt({"1"}));
    EXPECT_EQ(rebase(L({"0", "1"}), Anchor::right, unit()), Rt({"1", "-1"}));
    const Interval iv(Q("-3/2"), Q("7/3"));
    const auto p = L({"1/2", "-3", "0", "5/7", "2"});
    EXPECT_EQ(rebase(rebase(p, Anchor::right, iv), Anchor::left, iv), p);
    EXPECT_EQ(rebase(p, Anchor::left, iv), p);
}

TEST(ShiftedPolynomial, TailIntegral) {
    // ∫_θ^1 (s - 0) ds = (1 - θ²)/2, i.e. (b-θ) - (b-θ)²/2 right-anchored
    const auto t = tail_integral(L({"0", "1"}), unit());
    EXPECT_EQ(t, Rt({"0", "1", "-1/2"}));
    EXPECT_EQ(evaluate(t, Q(0), unit()), Q("1/2"));
}

class ExactPolyProperties : public ::testing::TestWithParam<int> {};

TEST_P(ExactPolyProperties, LinearityInvolutionFundamentalTheorem) {
    TrialRng rng(kDefaultSeed, static_cast<std::uint64_t>(GetParam()));
    const Interval iv = random_interval(rng);
    const auto p = random_polynomial(rng, static_cast<unsigned>(rng.uniform(0, 8)));
    const auto q = random_polynomial(rng, static_cast<unsigned>(rng.uniform(0, 8)));
    const auto m = static_cast<unsigned>(rng.uniform(0, 4));

    EXPECT_EQ(integrate_weighted(p + q, m, iv), integrate_weighted(p, m, iv) + integrate_weighted(q, m, iv));
    EXPECT_EQ(rebase(rebase(p, Anchor::right, iv), Anchor::left, iv), p);
    EXPECT_EQ(integrate_weighted(differentiate(p), 0, iv), evaluate(p, iv.b(), iv) - evaluate(p, iv.a(), iv));
    const auto pr = rebase(p, Anchor::right, iv);
    EXPECT_EQ(integrate_weighted(pr, m, iv), integrate_weighted(p, m, iv));
    const Rational s = iv.a() + rng.rational(1, 1).abs() * iv.length();
    EXPECT_EQ(evaluate(pr, s, iv), evaluate(p, s, iv));
}

INSTANTIATE_TEST_SUITE_P(Random, ExactPolyProperties, ::testing::Range(0, 50));
