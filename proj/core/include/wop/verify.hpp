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

#include <cstdint>
#include <string>
#include <vector>

#include "wop/corollary.hpp"
#include "wop/random.hpp"

namespace wop {

// Randomized invariant suite behind `wopineq verify`.
//
// Per trial (random interval, m <= max_weight, N <= max_degree, n <= max_dim,
// signal degree <= max_signal_degree, random orientation):
//   nonnegativity        gap >= 0 for every N' <= N
//   exactness            gap == 0 for every N' >= deg w
//   monotonicity         bound(N') - bound(N'-1) == chi⁻¹ πᵀRπ >= 0
//   form_agreement       Ξ-form == Π-form for every N' <= N
//   orientation_duality  right bound on w == left bound on the reflected w
// Corollary crosschecks run trials/10 times per id, dominance trials/5 per pair.

struct VerifyOptions {
    std::size_t trials = 1000;
    std::uint64_t seed = kDefaultSeed;
    unsigned max_degree = 6;
    unsigned max_weight = 4;
    std::size_t max_dim = 3;
    unsigned max_signal_degree = 8;
    Caps caps{};
    bool include_corollaries = true;  // crosscheck and dominance suites
};

struct PropertySummary {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
};

struct VerifyFailure {
    std::string property;
    std::size_t trial = 0;
    std::string detail;
    // Empty for suites that only report aggregate counts.
    std::string signal_json;
    std::string R_json;
    unsigned weight = 0;
    unsigned degree = 0;
    Anchor orientation = Anchor::left;
};

struct VerifyReport {
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 0;
    std::vector<PropertySummary> properties;
    std::vector<VerifyFailure> failures;

    bool passed() const { return failures.empty(); }
};

VerifyReport run_verify(const VerifyOptions& opts);

/// Deterministic JSON; failure entries carry the seed, trial and serialized inputs.
std::string to_json_string(const VerifyReport& r);

}  // namespace wop
