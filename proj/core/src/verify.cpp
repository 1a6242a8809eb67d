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

#include "wop/verify.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"
#include "wop/errors.hpp"
#include "wop/serialize.hpp"

namespace wop {

namespace {

enum Prop { kNonneg, kExact, kMono, kForms, kDual, kPropCount };
constexpr const char* kPropNames[kPropCount] = {"nonnegativity", "exactness", "monotonicity", "form_agreement",
                                                 "orientation_duality"};

struct Trial {
    PolynomialSignal w;
    RationalMatrix R;
    unsigned m;
    unsigned N;
    Anchor orientation;
};

Trial draw_trial(const VerifyOptions& o, std::size_t t) {
    TrialRng rng(o.seed, t);
    const Interval iv = random_interval(rng);
    const auto m = static_cast<unsigned>(rng.uniform(0, o.max_weight));
    const auto N = static_cast<unsigned>(rng.uniform(0, o.max_degree));
    const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(o.max_dim)));
    const Anchor orientation = rng.coin() ? Anchor::right : Anchor::left;
    PolynomialSignal w = random_signal(rng, iv, n, o.max_signal_degree);
    RationalMatrix R = random_spd(rng, n);
    return {std::move(w), std::move(R), m, N, orientation};
}

Rational xi_bound(const PolynomialSignal& w, const RationalMatrix& R, const BasisConfig& cfg) {
    const WopBasis basis = gram_schmidt(cfg);
    const BoundMatrices bm = assemble_bound_matrices(basis);
    return xi_form_value(moments(w, cfg), bm.Xi, R);
}

// chi_k⁻¹ π_kᵀ R π_k
Rational R_term(const RationalMatrix& R, const ProjectionVector<Rational>& pi, const WopBasis& basis, std::size_t k) {
    return R.quadratic(pi.block(k)) / basis.chi()[k];
}

// One message per property; empty when the trial satisfies it.
std::array<std::string, kPropCount> check_trial(const Trial& tr, const Caps& caps) {
    std::array<std::string, kPropCount> bad{};
    const BasisConfig top{tr.w.interval(), tr.m, tr.N, tr.orientation, caps};
    const WopBasis basis = gram_schmidt(top);
    const auto pi = projections(tr.w, basis);
    const Rational e = energy(tr.w, tr.R, tr.m, tr.orientation);
    const int deg = tr.w.max_degree();

    Rational running(0);
    Rational prev_xi(0);
    for (unsigned k = 0; k <= tr.N; ++k) {
        const Rational term = R_term(tr.R, pi, basis, k);
        running += term;
        BasisConfig cfg = top;
        cfg.degree = k;
        const Rational xi = xi_bound(tr.w, tr.R, cfg);
        const std::string at = " at N = " + std::to_string(k);

        if (bad[kNonneg].empty() && (e - running).sign() < 0)
            bad[kNonneg] = "gap " + (e - running).str() + at;
        if (bad[kExact].empty() && static_cast<int>(k) >= deg && e != running)
            bad[kExact] = "gap " + (e - running).str() + " with signal degree " + std::to_string(deg) + at;
        if (bad[kForms].empty() && xi != running)
            bad[kForms] = "Xi-form " + xi.str() + " vs Pi-form " + running.str() + at;
        if (bad[kMono].empty() && (term.sign() < 0 || (k > 0 && xi - prev_xi != term)))
            bad[kMono] = "increment " + (xi - prev_xi).str() + " vs term " + term.str() + at;
        prev_xi = xi;
    }

    BasisConfig flipped = top;
    flipped.orientation = opposite(tr.orientation);
    const PolynomialSignal r = tr.w.reflected();
    const Rational b_here = running;
    const Rational b_there = xi_bound(r, tr.R, flipped);
    const Rational e_there = energy(r, tr.R, tr.m, flipped.orientation);
    if (b_here != b_there || e != e_there)
        bad[kDual] = "bound " + b_here.str() + " vs reflected " + b_there.str() + ", energy " + e.str() +
                     " vs reflected " + e_there.str();
    return bad;
}

std::size_t share(std::size_t trials, std::size_t divisor) {
    if (trials == 0) return 0;
    return std::max<std::size_t>(1, trials / divisor);
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
    VerifyReport report;
    report.seed = opts.seed;
    report.trials = opts.trials;
    if (opts.trials == 0) return report;

    std::array<PropertySummary, kPropCount> props;
    for (int p = 0; p < kPropCount; ++p) props[p] = {kPropNames[p], opts.trials, 0};

    for (std::size_t t = 0; t < opts.trials; ++t) {
        const Trial tr = draw_trial(opts, t);
        std::array<std::string, kPropCount> bad;
        try {
            bad = check_trial(tr, opts.caps);
        } catch (const InternalConsistencyError& e) {
            bad[kNonneg] = e.what();
        }
        for (int p = 0; p < kPropCount; ++p) {
            if (bad[p].empty()) continue;
            ++props[p].failures;
            report.failures.push_back({kPropNames[p], t, bad[p], to_json_string(tr.w), to_json_string(tr.R), tr.m,
                                       tr.N, tr.orientation});
        }
    }
    report.properties.assign(props.begin(), props.end());
    if (!opts.include_corollaries) return report;

    const std::size_t cc = share(opts.trials, 10);
    for (CorollaryId id : all_corollaries()) {
        CrosscheckOptions co;
        co.trials = cc;
        co.seed = opts.seed;
        const CrosscheckReport r = crosscheck(id, co);
        const std::string name = "crosscheck_" + std::string(to_string(id));
        report.properties.push_back({name, r.trials, r.failures.size()});
        for (const auto& f : r.failures)
            report.failures.push_back({name, f.trial, f.detail + " (closed form " + f.closed_form + ", generic " +
                                                           f.generic + ")",
                                       f.signal_json, f.R_json, f.weight, f.degree, Anchor::left});
    }

    const std::size_t dt = share(opts.trials, 5);
    for (CorollaryId cmp : {CorollaryId::ParkC5, CorollaryId::PiSquaredC8, CorollaryId::JfiCoefC4,
                            CorollaryId::JfiCoefC10}) {
        const DominanceReport d = dominance(cmp, dt, opts.seed);
        const std::string name =
            "dominance_" + std::string(to_string(d.stronger)) + "_" + std::string(to_string(d.weaker));
        const std::size_t fails = d.violations + d.formula_mismatches;
        report.properties.push_back({name, d.trials, fails});
        if (fails > 0)
            report.failures.push_back({name, 0,
                                       std::to_string(d.violations) + " negative differences, " +
                                           std::to_string(d.formula_mismatches) +
                                           " differences off their closed form; min difference " +
                                           format_double(d.min_difference),
                                       "", "", 0, 0, Anchor::left});
    }
    return report;
}

std::string to_json_string(const VerifyReport& r) {
    using json = nlohmann::ordered_json;
    json props = json::array();
    for (const auto& p : r.properties)
        props.push_back(json{{"name", p.name}, {"trials", p.trials}, {"failures", p.failures}});
    json failures = json::array();
    for (const auto& f : r.failures) {
        json j{{"property", f.property},
               {"seed", r.seed},
               {"trial", f.trial},
               {"detail", f.detail},
               {"reproduce", "wopineq verify --seed " + std::to_string(r.seed) + " --trials " +
                                 std::to_string(r.trials)}};
        if (!f.signal_json.empty()) {
            j["config"] = json{{"m", f.weight}, {"N", f.degree}, {"orientation", std::string(to_string(f.orientation))}};
            j["signal"] = json::parse(f.signal_json);
            j["R"] = json::parse(f.R_json);
        }
        failures.push_back(std::move(j));
    }
    std::size_t total = 0;
    for (const auto& p : r.properties) total += p.failures;
    const json j{{"seed", r.seed},
                 {"trials", r.trials},
                 {"passed", r.passed()},
                 {"total_failures", total},
                 {"properties", std::move(props)},
                 {"failures", std::move(failures)}};
    return j.dump(2);
}

}  // namespace wop
