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

#include "test_support.hpp"
#include "wop/errors.hpp"
#include "wop/random.hpp"
#include "wop/serialize.hpp"

using namespace wop;
using namespace wop::testing;

TEST(SignalJson, PolynomialRoundTrip) {
    TrialRng rng(kDefaultSeed, 11);
    const auto w = random_signal(rng, random_interval(rng), 3, 5);
    const Signal back = parse_signal_json(to_json_string(w));
    ASSERT_TRUE(back.is_polynomial());
    EXPECT_EQ(back.polynomial().components(), w.components());
    EXPECT_EQ(back.interval(), w.interval());
}

TEST(SignalJson, RightAnchor) {
    const Signal s =
        parse_signal_json(R"({"kind":"polynomial","interval":["0","2"],"anchor":"right","components":[["0","1"]]})");
    EXPECT_EQ(s.polynomial().at(Q(0))[0], Q(2));
}

TEST(SignalJson, Builtins) {
    const Signal s = parse_signal_json(
        R"({"kind":"builtin","name":"sin","interval":[0,1],"params":{"amplitude":2,"frequency":3}})");
    EXPECT_FALSE(s.is_polynomial());
    EXPECT_NEAR(s.at(0.5)[0], 2.0 * std::sin(1.5), 1e-15);
    EXPECT_NEAR(s.derivative_at(0.5)[0], 6.0 * std::cos(1.5), 1e-15);

    const Signal e = parse_signal_json(R"({"kind":"builtin","name":"exp","interval":["-1","1"],"params":{"rate":-2}})");
    EXPECT_NEAR(e.at(0.25)[0], std::exp(-0.5), 1e-15);

    const Signal p = parse_signal_json(
        R"({"kind":"builtin","name":"poly-float","interval":[1,2],"params":{"coefficients":[[1,0.5],[0,0,2]]}})");
    EXPECT_EQ(p.dim(), 2u);
    EXPECT_DOUBLE_EQ(p.at(1.5)[0], 1.25);
    EXPECT_DOUBLE_EQ(p.at(1.5)[1], 0.5);
    EXPECT_DOUBLE_EQ(p.derivative_at(1.5)[1], 2.0);
}

TEST(SignalJson, MalformedInputIsRejected) {
    EXPECT_THROW(parse_signal_json("{"), InvalidInput);
    EXPECT_THROW(parse_signal_json(R"({"kind":"wave"})"), InvalidInput);
    EXPECT_THROW(parse_signal_json(R"({"kind":"polynomial","interval":["1","0"],"components":[["1"]]})"),
                 InvalidInput);
    EXPECT_THROW(parse_signal_json(R"({"kind":"polynomial","interval":["0","1"],"components":[[0.5]]})"),
                 InvalidInput);
    EXPECT_THROW(parse_signal_json(R"({"kind":"polynomial","interval":["0","1"]})"), InvalidInput);
    EXPECT_THROW(parse_signal_json(R"({"kind":"builtin","name":"tan","interval":[0,1]})"), InvalidInput);
}

TEST(MatrixJson, ExactAndReal) {
    const auto m = parse_matrix_json(R"([["2","1/2"],["1/2","1"]])");
    ASSERT_TRUE(m.exact.has_value());
    EXPECT_EQ((*m.exact)(0, 1), Q("1/2"));
    EXPECT_DOUBLE_EQ(m.real(0, 1), 0.5);
    const auto r = parse_matrix_json(R"({"R":[[1.5,0],[0,1]]})");
    EXPECT_FALSE(r.exact.has_value());
    EXPECT_DOUBLE_EQ(r.real(0, 0), 1.5);
    EXPECT_EQ(to_json_string(*m.exact), R"([["2","1/2"],["1/2","1"]])");
    EXPECT_THROW(parse_matrix_json("[[1,2],[3]]"), InvalidInput);
    EXPECT_THROW(parse_matrix_json("[]"), InvalidInput);
    EXPECT_THROW(parse_matrix_json("nope"), InvalidInput);
}

TEST(BasisEmission, JsonCsvLatex) {
    const auto basis = gram_schmidt(BasisConfig{unit(), 0, 2});
    const auto bm = assemble_bound_matrices(basis);
    const std::string js = basis_to_json(basis, bm);
    EXPECT_NE(js.find(R"("chi":["1","1/12","1/180"])"), std::string::npos);
    EXPECT_NE(js.find(R"("Ginv":[["1","0","0"],["-1/2","1","0"],["1/6","-1","1"]])"), std::string::npos);

    const std::string csv = basis_to_csv(basis, bm);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "matrix,(1,1),(1,2),(1,3),(2,1),(2,2),(2,3),(3,1),(3,2),(3,3)");
    EXPECT_NE(csv.find("Ginv,1,0,0,-1/2,1,0,1/6,-1,1"), std::string::npos);

    const std::string tex = basis_to_latex(basis, bm);
    EXPECT_NE(tex.find("1 & 0 & 0 \\\\\n  -\\frac{1}{2} & 1 & 0 \\\\\n  \\frac{1}{6} & -1 & 1"), std::string::npos);
}

TEST(BoundEmission, Json) {
    const auto r = bound_xi_form(scalar(unit(), {"0", "1"}), R1(), BasisConfig{unit(), 0, 1});
    EXPECT_EQ(to_json_string(r),
              R"({"bound":"1/3","energy":"1/3","gap":"0","N":1,"m":0,"interval":["0","1"],)"
              R"("orientation":"left","path":"exact"})");
}

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1e-300), "1e-300");
    EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}
