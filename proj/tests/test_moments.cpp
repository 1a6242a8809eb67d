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

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "wop/errors.hpp"
#include "wop/moments.hpp"
#include "wop/random.hpp"

using namespace wop;
using namespace wop::testing;

namespace {

BasisConfig config(const Interval& iv, unsigned m, unsigned N, Anchor o = Anchor::left) {
    return BasisConfig{iv, m, N, o, {}};
}

double rel(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

}  // namespace

TEST(Quadrature, Examples) {
    const QuadratureConfig q;
    EXPECT_NEAR(quadrature_integrate([](double) { return 1.0; }, 0.0, 1.0, q).value, 1.0, 1e-14);
    const auto r5 = gauss_legendre(16);
    double s = 0.0;
    for (std::size_t i = 0; i < r5.nodes.size(); ++i) s += r5.weights[i] * std::pow(0.5 * r5.nodes[i] + 0.5, 5) * 0.5;
    EXPECT_NEAR(s, 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(quadrature_integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, q).value, 2.0,
                1e-12);
}

TEST(Quadrature, NonConvergenceCarriesEstimates) {
    QuadratureConfig q;
    q.max_doublings = 1;
    q.nodes_per_panel = 2;
    q.initial_panels = 1;
    try {
        quadrature_integrate([](double x) { return std::sin(200.0 * x); }, 0.0, 3.0, q);
        FAIL() << "expected QuadratureError";
    } catch (const QuadratureError& e) {
        EXPECT_NE(e.previous_estimate(), e.last_estimate());
    }
}

TEST(Quadrature, RejectsBadConfig) {
    QuadratureConfig q;
    q.relative_tolerance = 0.0;
    EXPECT_THROW(q.validate(), InvalidInput);
    q = QuadratureConfig{};
    q.nodes_per_panel = 0;
    EXPECT_THROW(q.validate(), InvalidInput);
}

TEST(Moments, Examples) {
    const auto zero = moments(scalar(unit(), {}), config(unit(), 0, 2));
    for (const auto& x : zero.entries) EXPECT_TRUE(x.is_zero());

    const auto f = moments(scalar(unit(), {"0", "1"}), config(unit(), 0, 2));
    EXPECT_EQ(f.entries, Qs({"1/2", "1/3", "1/4"}));

    // Block 2 is twice the triple nested integral of w.
    const Interval iv(Q("-1/2"), Q("3/4"));
    const auto w = scalar(iv, {"2", "-1", "3/2", "1"});
    const auto f2 = moments(w, config(iv, 0, 2));
    EXPECT_EQ(f2.at(2, 0), Rational(2) * nested_moment(w, 2)[0]);
}

TEST(Moments, BlockLayoutIsKronecker) {
    const PolynomialSignal w(unit(), {L({"1"}), L({"0", "1"})});
    const auto f = moments(w, config(unit(), 0, 1));
    EXPECT_EQ(f.entries, Qs({"1", "1/2", "1/2", "1/3"}));
}

TEST(Projections, Examples) {
    const Interval iv(Q(1), Q(4));
    const auto w = scalar(iv, {"3", "-1", "2"});
    const auto basis0 = gram_schmidt(config(iv, 2, 0));
    EXPECT_EQ(projections(w, basis0).entries, moments(w, config(iv, 2, 0)).entries);

    const auto pc = projections(scalar(unit(), {"1"}), gram_schmidt(config(unit(), 0, 2)));
    EXPECT_EQ(pc.entries, Qs({"1", "0", "0"}));

    const auto p1 = projections(scalar(unit(), {"0", "1"}), gram_schmidt(config(unit(), 0, 1)));
    EXPECT_EQ(p1.at(1, 0), Q("1/12"));
}

TEST(Energy, Examples) {
    EXPECT_EQ(energy(scalar(unit(), {}), R1(), 0), Q(0));
    EXPECT_EQ(energy(scalar(unit(), {"0", "1"}), R1(), 0), Q("1/3"));
    const PolynomialSignal ones(unit(), {L({"1"}), L({"1"})});
    EXPECT_EQ(energy(ones, RationalMatrix::identity(2), 1), Q(1));
    EXPECT_THROW(energy(ones, R1(), 0), InvalidInput);
}

TEST(NestedOracle, Examples) {
    const auto w = scalar(unit(), {"0", "1"});
    EXPECT_EQ(nested_energy_oracle(w, R1(), 0), energy(w, R1(), 0));
    EXPECT_EQ(nested_energy_oracle(scalar(unit(), {"1"}), R1(), 1), Q("1/2"));
    EXPECT_EQ(Rational(2) * nested_energy_oracle(w, R1(), 2), Q("1/5"));
    EXPECT_EQ(nested_moment(scalar(unit(), {"1"}), 1)[0], Q("1/2"));
    EXPECT_EQ(nested_moment(w, 1)[0], Q("1/3"));
    EXPECT_EQ(nested_moment(w, 0)[0], Q("1/2"));
}

TEST(DerivativeMoments, Examples) {
    const auto c = derivative_moments(scalar(unit(), {"7/3"}), config(unit(), 0, 3));
    for (const auto& x : c.entries) EXPECT_TRUE(x.is_zero());
    EXPECT_EQ(derivative_moments(scalar(unit(), {"0", "1"}), config(unit(), 0, 0)).at(0, 0), Q(1));
    EXPECT_EQ(derivative_moments(scalar(unit(), {"0", "0", "1"}), config(unit(), 0, 1)).at(1, 0), Q("2/3"));
}

TEST(Signal, BlackBoxContract) {
    const Signal s(BlackBoxSignal{unit(), 1, [](double x) { return std::vector<double>{x}; }, {}});
    EXPECT_FALSE(s.is_polynomial());
    EXPECT_FALSE(s.has_derivative());
    EXPECT_THROW(s.derivative(), InvalidInput);
    EXPECT_THROW(PolynomialSignal(unit(), {}), InvalidInput);
    EXPECT_THROW(PolynomialSignal(unit(), {L({"1"}), Rt({"1"})}), InvalidInput);
}

class MomentProperties : public ::testing::TestWithParam<int> {};

TEST_P(MomentProperties, ExactIdentities) {
    TrialRng rng(kDefaultSeed, static_cast<std::uint64_t>(GetParam()));
    const Interval iv = random_interval(rng);
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto m = static_cast<unsigned>(rng.uniform(0, 4));
    const auto N = static_cast<unsigned>(rng.uniform(0, 6));
    const Anchor o = rng.coin() ? Anchor::right : Anchor::left;
    const auto u = random_signal(rng, iv, n, 6);
    const auto v = random_signal(rng, iv, n, 6);
    const auto R = random_spd(rng, n);
    const BasisConfig cfg = config(iv, m, N, o);
    const auto basis = gram_schmidt(cfg);

    const auto F = moments(u, cfg);
    EXPECT_EQ(projections(u, basis), project_moments(F, assemble_bound_matrices(basis).Ginv));

    const auto mm = nested_moment(u, m);
    const auto direct = moments(u, config(iv, m, 0));
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(factorial(m) * mm[i], direct.at(0, i));
    EXPECT_EQ(factorial(m) * nested_energy_oracle(u, R, m), energy(u, R, m));

    EXPECT_EQ(derivative_moments(u, cfg), moments(u.derivative(), cfg));

    const Rational alpha = rng.rational(5, 4), beta = rng.rational(5, 4);
    const auto lhs = moments(u.scaled(alpha) + v.scaled(beta), cfg);
    const auto fv = moments(v, cfg);
    for (std::size_t k = 0; k < lhs.entries.size(); ++k)
        EXPECT_EQ(lhs.entries[k], alpha * F.entries[k] + beta * fv.entries[k]);

    // Representation does not matter.
    EXPECT_EQ(moments(u.rebased(opposite(u.component(0).anchor())), cfg), F);
}

TEST_P(MomentProperties, QuadratureMatchesExact) {
    TrialRng rng(kDefaultSeed ^ 0xF00D, static_cast<std::uint64_t>(GetParam()));
    const Interval iv = random_interval(rng);
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto m = static_cast<unsigned>(rng.uniform(0, 4));
    const auto N = static_cast<unsigned>(rng.uniform(0, 4));
    const auto w = random_signal(rng, iv, n, 8);
    const auto R = random_spd(rng, n);
    const BasisConfig cfg = config(iv, m, N);
    const QuadratureConfig q;

    const auto exact = moments(w, cfg);
    const auto approx = moments(Signal(w), cfg, q);
    for (std::size_t k = 0; k < exact.entries.size(); ++k) {
        const double ref = exact.entries[k].to_double();
        if (exact.entries[k].is_zero()) continue;
        EXPECT_LT(rel(approx.entries[k], ref), 1e-10);
    }
    const double e = energy(w, R, m).to_double();
    if (e != 0.0) EXPECT_LT(rel(energy(Signal(w), to_real(R), m, Anchor::left, q), e), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Random, MomentProperties, ::testing::Range(0, 40));
