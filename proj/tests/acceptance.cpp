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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "wop/bound.hpp"
#include "wop/corollary.hpp"
#include "wop/random.hpp"
#include "wop/verify.hpp"

namespace {

using namespace wop;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string note;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << s << " s";
    return os.str();
}

RationalMatrix outer(const std::vector<Rational>& d) {
    RationalMatrix out(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) out(i, j) = d[i] * d[j];
    return out;
}

Outcome matrix_reproduction() {
    const auto t0 = Clock::now();
    std::size_t bad = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        TrialRng rng(kDefaultSeed, t);
        const Interval iv = random_interval(rng);
        const Rational a = iv.a(), b = iv.b(), h = iv.length();
        const auto bm = assemble_bound_matrices(gram_schmidt(BasisConfig{iv, 0, 2}));
        const auto ginv = RationalMatrix::from_rows({{Rational(1), Rational(0), Rational(0)},
                                                     {(a - b) / Rational(2), Rational(1), Rational(0)},
                                                     {h * h / Rational(6), a - b, Rational(1)}});
        const std::vector<Rational> d1{Rational(1), Rational(0), Rational(0)};
        const std::vector<Rational> d2{Rational(1), Rational(2) / (a - b), Rational(0)};
        const std::vector<Rational> d3{Rational(1), Rational(6) / (a - b), Rational(6) / (h * h)};
        const auto xi = h.inverse() * (outer(d1) + Rational(3) * outer(d2) + Rational(5) * outer(d3));
        if (!(bm.Ginv == ginv) || !(bm.Xi == xi)) ++bad;
    }
    const double s = seconds_since(t0);
    return {bad == 0 && s < 1.0, "20 intervals, " + std::to_string(bad) + " mismatches, " + fmt_seconds(s)};
}

Outcome corollary_crosschecks() {
    const auto t0 = Clock::now();
    std::ostringstream note;
    bool ok = true;
    for (CorollaryId id : {CorollaryId::C1, CorollaryId::C2, CorollaryId::C3, CorollaryId::C5, CorollaryId::C6,
                           CorollaryId::C7, CorollaryId::C8, CorollaryId::C9, CorollaryId::C11}) {
        CrosscheckOptions o;
        o.trials = 100;
        const auto r = crosscheck(id, o);
        if (!r.failures.empty() || r.exact_matches != 100) {
            ok = false;
            note << to_string(id) << " " << r.exact_matches << "/100; ";
        }
    }
    for (unsigned m = 0; m <= 3; ++m) {
        CrosscheckOptions o;
        o.trials = 25;
        o.weight = m;
        const auto r = crosscheck(CorollaryId::C4, o);
        if (!r.failures.empty()) {
            ok = false;
            note << "C4 m=" << m << " " << r.exact_matches << "/25; ";
        }
    }
    const double s = seconds_since(t0);
    ok = ok && s < 30.0;
    note << "C1-C3,C5-C9,C11 x100 and C4 m=0..3 x25 exact, " << fmt_seconds(s);
    return {ok, note.str()};
}

Outcome c10_adjudication() {
    CrosscheckOptions o;
    o.trials = 100;
    const auto derived = crosscheck(CorollaryId::C10, o);
    bool ok = derived.failures.empty() && derived.exact_matches == 100;

    std::size_t c11_mismatch = 0;
    CorollaryParams p;
    p.weight = 1;
    for (std::uint64_t t = 0; t < 100; ++t) {
        TrialRng rng(kDefaultSeed, t);
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto w = random_signal(rng, random_interval(rng), n, 6);
        const auto R = random_spd(rng, n);
        if (corollary_bound(CorollaryId::C10, w, R, p).exact() != corollary_bound(CorollaryId::C11, w, R, {}).exact())
            ++c11_mismatch;
    }
    ok = ok && c11_mismatch == 0;

    o.psi = PsiForm::printed;
    const auto printed = crosscheck(CorollaryId::C10, o);
    ok = ok && !printed.failures.empty();
    std::ostringstream note;
    note << "derived " << derived.exact_matches << "/100 exact, C11 at m=1 mismatches " << c11_mismatch
         << ", printed form mismatches " << printed.failures.size() << "/100 (max |discrepancy| "
         << printed.max_abs_discrepancy.to_double() << ")";
    if (!printed.failures.empty())
        note << "; first: trial " << printed.failures[0].trial << " m=" << printed.failures[0].weight
             << " closed form " << printed.failures[0].closed_form << " vs generic " << printed.failures[0].generic;
    return {ok, note.str()};
}

Outcome property_suite() {
    const auto t0 = Clock::now();
    VerifyOptions o;
    o.trials = 1000;
    o.include_corollaries = false;
    const auto r = run_verify(o);
    const double s = seconds_since(t0);
    std::ostringstream note;
    for (const auto& p : r.properties) note << p.name << " " << p.failures << "/" << p.trials << " failed; ";
    note << fmt_seconds(s);
    return {r.passed() && s < 60.0, note.str()};
}

Outcome dominance_checks() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream note;
    for (CorollaryId cmp : {CorollaryId::ParkC5, CorollaryId::PiSquaredC8, CorollaryId::JfiCoefC4}) {
        const auto d = dominance(cmp, 200, kDefaultSeed);
        ok = ok && d.violations == 0 && d.formula_mismatches == 0;
        note << to_string(d.stronger) << "-" << to_string(d.weaker) << " min " << d.min_difference << " ("
             << d.violations << " violations); ";
    }
    const double s = seconds_since(t0);
    note << fmt_seconds(s);
    return {ok && s < 10.0, note.str()};
}

Outcome exact_float_agreement() {
    const QuadratureConfig q;
    double worst_bound = 0.0, worst_energy = 0.0, worst_xi = 0.0;
    for (std::uint64_t t = 0; t < 50; ++t) {
        TrialRng rng(kDefaultSeed ^ 0xA6EE, t);
        const Interval iv = random_interval(rng);
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto m = static_cast<unsigned>(rng.uniform(0, 4));
        const auto N = static_cast<unsigned>(rng.uniform(0, 6));
        const auto w = random_signal(rng, iv, n, 8);
        const auto R = random_spd(rng, n);
        const BasisConfig cfg{iv, m, N};
        const auto exact = bound_xi_form(w, R, cfg);
        const auto pi = bound_pi_form(Signal(w), to_real(R), gram_schmidt(cfg), q);
        const auto xi = bound_xi_form(Signal(w), to_real(R), cfg, q);
        const auto rel = [](double x, const Rational& ref) {
            const double r = ref.to_double();
            return r == 0.0 ? std::abs(x) : std::abs(x - r) / std::abs(r);
        };
        worst_bound = std::max(worst_bound, rel(pi.bound, exact.bound));
        worst_energy = std::max(worst_energy, rel(pi.energy, exact.energy));
        worst_xi = std::max(worst_xi, rel(xi.bound, exact.bound));
    }
    std::ostringstream note;
    note << "50 signals, max relative error bound " << worst_bound << ", energy " << worst_energy
         << " (Xi-form bound " << worst_xi << ")";
    return {worst_bound < 1e-10 && worst_energy < 1e-10, note.str()};
}

Outcome sin_convergence() {
    QuadratureConfig q;
    q.relative_tolerance = 1e-12;
    const Signal s(BlackBoxSignal{Interval(Rational(0), Rational(1)), 1,
                                  [](double x) { return std::vector<double>{std::sin(3.0 * x)}; }, {}});
    const auto sweep = tightness_sweep(s, RealMatrix::identity(1), 0, Anchor::left, 0, 6, q);
    bool monotone = true;
    for (std::size_t N = 1; N < sweep.size(); ++N) monotone = monotone && sweep[N].gap < sweep[N - 1].gap;
    std::ostringstream note;
    note << "gaps";
    for (const auto& r : sweep) note << " " << r.gap;
    return {monotone && sweep.back().gap < 1e-6, note.str()};
}

Outcome orientation_duality() {
    std::size_t bad = 0;
    for (std::uint64_t t = 0; t < 100; ++t) {
        TrialRng rng(kDefaultSeed ^ 0xD0A1, t);
        const Interval iv = random_interval(rng);
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto m = static_cast<unsigned>(rng.uniform(0, 4));
        const auto N = static_cast<unsigned>(rng.uniform(0, 6));
        const auto w = random_signal(rng, iv, n, 8);
        const auto R = random_spd(rng, n);
        const auto right = bound_xi_form(w, R, BasisConfig{iv, m, N, Anchor::right});
        const auto left = bound_xi_form(w.reflected(), R, BasisConfig{iv, m, N, Anchor::left});
        if (right.bound != left.bound || right.energy != left.energy) ++bad;
    }
    return {bad == 0, "100 trials, " + std::to_string(bad) + " mismatches"};
}

std::pair<int, std::string> capture(const std::string& cmd) {
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism() {
    const std::string cmd = std::string(WOPINEQ_EXE) + " verify --seed 0x5EED 2>&1";
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    const bool same = a.second == b.second && !a.second.empty();
    return {same && a.first == 0 && b.first == 0,
            "two default verify runs, exit " + std::to_string(a.first) + "/" + std::to_string(b.first) + ", " +
                std::to_string(a.second.size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main() {
    const std::array<std::pair<const char*, std::function<Outcome()>>, 9> criteria{{
        {"matrix reproduction (N=2, m=0)", matrix_reproduction},
        {"corollary crosschecks", corollary_crosschecks},
        {"C10 adjudication", c10_adjudication},
        {"inequality property suite", property_suite},
        {"dominance over comparison bounds", dominance_checks},
        {"exact/float agreement", exact_float_agreement},
        {"non-polynomial convergence", sin_convergence},
        {"orientation duality", orientation_duality},
        {"verify determinism", determinism},
    }};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first << ": " << o.note << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
