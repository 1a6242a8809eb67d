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

#include "wop/random.hpp"

#include "wop/errors.hpp"

namespace wop {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial) {
    std::uint64_t s = master_seed;
    const std::uint64_t a = splitmix64(s);
    std::uint64_t t = a ^ (trial * 0xD1B54A32D192ED03ULL);
    state_ = splitmix64(t);
}

std::uint64_t TrialRng::next() { return splitmix64(state_); }

long TrialRng::uniform(long lo, long hi) {
    if (hi < lo) throw InvalidInput("TrialRng::uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Rational TrialRng::rational(long num_bound, long den_max) {
    const long p = uniform(-num_bound, num_bound);
    const long q = uniform(1, den_max);
    return Rational(p, q);
}

Rational TrialRng::nonzero_rational(long num_bound, long den_max) {
    long p = uniform(1, num_bound);
    if (coin()) p = -p;
    return Rational(p, uniform(1, den_max));
}

Interval random_interval(TrialRng& rng) {
    Rational a = rng.rational(12, 4);
    Rational len(rng.uniform(1, 12), rng.uniform(1, 6));
    return Interval(a, a + len);
}

ShiftedPolynomial random_polynomial(TrialRng& rng, unsigned degree, Anchor anchor) {
    std::vector<Rational> c;
    c.reserve(degree + 1);
    for (unsigned k = 0; k < degree; ++k) c.push_back(rng.rational(9, 6));
    c.push_back(rng.nonzero_rational(9, 6));
    return ShiftedPolynomial(anchor, std::move(c));
}

PolynomialSignal random_signal(TrialRng& rng, const Interval& iv, std::size_t dim, unsigned max_degree,
                               bool exact_degree, Anchor anchor) {
    std::vector<ShiftedPolynomial> comps;
    comps.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const unsigned d = (exact_degree && i == 0) ? max_degree
                                                    : static_cast<unsigned>(rng.uniform(0, max_degree));
        comps.push_back(random_polynomial(rng, d, anchor));
    }
    return PolynomialSignal(iv, std::move(comps));
}

RationalMatrix random_spd(TrialRng& rng, std::size_t n, const Rational& eps) {
    RationalMatrix L = RationalMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) L(i, j) = rng.rational(5, 3);
    return L * L.transpose() + eps * RationalMatrix::identity(n);
}

}  // namespace wop
