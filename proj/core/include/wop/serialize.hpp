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

#include <optional>
#include <string>
#include <string_view>

#include "wop/bound.hpp"
#include "wop/corollary.hpp"

// Text formats. Rationals are always the strings "p/q" or "p". JSON output is
// compact, key-ordered and deterministic, so identical inputs give identical bytes.

namespace wop {

// ---- signals ---------------------------------------------------------------
//
//   {"kind":"polynomial","interval":["a","b"],"anchor":"left",
//    "components":[["c0","c1",...],...]}
//   {"kind":"builtin","name":"sin"|"exp"|"poly-float","interval":[a,b],"params":{...}}
//
// sin:        amplitude * sin(frequency * s + phase)
// exp:        amplitude * exp(rate * s)
// poly-float: "coefficients":[[c0,c1,...],...] floats in powers of (s-a)

std::string to_json_string(const PolynomialSignal& w);
/// Throws InvalidInput on malformed text or schema violations.
Signal parse_signal_json(std::string_view text);

// ---- matrices --------------------------------------------------------------
//
//   [["1","0"],["0","1"]] or {"R": [...]}. Entries that are all strings or
//   integers are exact; any floating entry makes the matrix real-only.

std::string to_json_string(const RationalMatrix& m);

struct ParsedMatrix {
    std::optional<RationalMatrix> exact;
    RealMatrix real;
};

ParsedMatrix parse_matrix_json(std::string_view text);

// ---- reports ---------------------------------------------------------------

std::string basis_to_json(const WopBasis& basis, const BoundMatrices& bm);
std::string bound_matrices_to_json(const WopBasis& basis, const BoundMatrices& bm);
std::string basis_to_csv(const WopBasis& basis, const BoundMatrices& bm);
std::string basis_to_latex(const WopBasis& basis, const BoundMatrices& bm);
std::string latex_matrix(const RationalMatrix& m);

std::string to_json_string(const ExactBound& r);
std::string to_json_string(const RealBound& r);

std::string to_json_string(const CrosscheckReport& r);
std::string to_json_string(const DominanceReport& r);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace wop
