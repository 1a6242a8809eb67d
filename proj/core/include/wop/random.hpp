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

#include "wop/matrix.hpp"
#include "wop/signal.hpp"

namespace wop {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/*
 * Deterministic generator for randomized trials. Each trial gets its own
 * stream derived from (master seed, trial index) with splitmix64, so trials
 * are reproducible individually and independent of evaluation order.
 * Bounded draws avoid std distributions, whose output is library-specific.
 */
class TrialRng {
public:
    TrialRng(std::uint64_t master_seed, std::uint64_t trial);

    std::uint64_t next();
    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return (next() >> 63) != 0; }
    /// p/q with p in [-num_bound, num_bound], q in [1, den_max].
    Rational rational(long num_bound, long den_max);
    Rational nonzero_rational(long num_bound, long den_max);

private:
    std::uint64_t state_;
};

Interval random_interval(TrialRng& rng);

/// Polynomial of exactly the given degree (nonzero leading coefficient).
ShiftedPolynomial random_polynomial(TrialRng& rng, unsigned degree, Anchor anchor = Anchor::left);

/// Components of degree at most max_degree; when exact_degree is set, the first component has exactly that degree.
PolynomialSignal random_signal(TrialRng& rng, const Interval& iv, std::size_t dim, unsigned max_degree,
                               bool exact_degree = false, Anchor anchor = Anchor::left);

/// L Lᵀ + eps I with L random unit lower triangular; positive definite by construction.
RationalMatrix random_spd(TrialRng& rng, std::size_t n, const Rational& eps = Rational(1));

}  // namespace wop
