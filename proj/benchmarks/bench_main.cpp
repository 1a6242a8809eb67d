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

#include <benchmark/benchmark.h>

#include <cmath>

#include "wop/bound.hpp"
#include "wop/random.hpp"

namespace {

using namespace wop;

void BM_GramSchmidt(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    const BasisConfig cfg{Interval(Rational(-3, 2), Rational(7, 3)), 2, N};
    for (auto _ : state) benchmark::DoNotOptimize(gram_schmidt(cfg));
}
BENCHMARK(BM_GramSchmidt)->DenseRange(2, 10, 4);

void BM_ExactBound(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    TrialRng rng(kDefaultSeed, 0);
    const Interval iv = random_interval(rng);
    const auto w = random_signal(rng, iv, 3, 8, true);
    const auto R = random_spd(rng, 3);
    const BasisConfig cfg{iv, 2, N};
    for (auto _ : state) benchmark::DoNotOptimize(bound_xi_form(w, R, cfg));
}
BENCHMARK(BM_ExactBound)->DenseRange(0, 6, 3);

void BM_QuadratureMoments(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    const Signal s(BlackBoxSignal{Interval(Rational(0), Rational(1)), 1,
                                  [](double x) { return std::vector<double>{std::sin(3.0 * x)}; }, {}});
    const BasisConfig cfg{s.interval(), 0, N};
    const QuadratureConfig q;
    for (auto _ : state) benchmark::DoNotOptimize(moments(s, cfg, q));
}
BENCHMARK(BM_QuadratureMoments)->DenseRange(0, 6, 3);

void BM_TightnessSweep(benchmark::State& state) {
    for (auto _ : state) {
        TrialRng rng(kDefaultSeed, 1);
        const auto w = random_signal(rng, random_interval(rng), 2, 8);
        benchmark::DoNotOptimize(tightness_sweep(w, random_spd(rng, 2), 3, Anchor::left, 0, 6));
    }
}
BENCHMARK(BM_TightnessSweep);

}  // namespace
BENCHMARK_MAIN();
