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

#include "wop/corollary.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "wop/errors.hpp"
#include "wop/random.hpp"
#include "wop/serialize.hpp"

namespace wop {

namespace {

constexpr std::array<std::pair<CorollaryId, std::string_view>, 15> kNames{{
    {CorollaryId::C1, "C1"},
    {CorollaryId::C2, "C2"},
    {CorollaryId::C3, "C3"},
    {CorollaryId::C4, "C4"},
    {CorollaryId::C5, "C5"},
    {CorollaryId::C6, "C6"},
    {CorollaryId::C7, "C7"},
    {CorollaryId::C8, "C8"},
    {CorollaryId::C9, "C9"},
    {CorollaryId::C10, "C10"},
    {CorollaryId::C11, "C11"},
    {CorollaryId::ParkC5, "ParkC5"},
    {CorollaryId::PiSquaredC8, "PiSquaredC8"},
    {CorollaryId::JfiCoefC4, "JfiCoefC4"},
    {CorollaryId::JfiCoefC10, "JfiCoefC10"},
}};

// Vector helpers over the scalar field.
template <class T>
using Vec = std::vector<T>;

template <class T>
Vec<T> combo(std::initializer_list<std::pair<T, const Vec<T>*>> parts) {
    Vec<T> out(parts.begin()->second->size(), T(0));
    for (const auto& [c, v] : parts)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * (*v)[i];
    return out;
}

template <class T>
T power(const T& x, unsigned e) {
    T r(1);
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

template <class T>
T fact(unsigned n) {
    T r(1);
    for (unsigned i = 2; i <= n; ++i) r *= T(static_cast<long>(i));
    return r;
}

template <class T>
T num(long x) {
    return T(x);
}

template <class T>
const Vec<T>& nested_at(const CorollaryInputs<T>& in, unsigned j) {
    if (j >= in.nested.size()) throw InvalidInput("corollary inputs lack the required nested integral");
    return in.nested[j];
}

// Θ̃_m = h^m/m! w(b) - Ω̃_(m-1), Θ̃_0 = w(b) - w(a)
template <class T>
Vec<T> theta_tilde(const CorollaryInputs<T>& in, unsigned m) {
    const T one(1);
    if (m == 0) return combo<T>({{one, &in.w_b}, {-one, &in.w_a}});
    const T c = power(in.length, m) / fact<T>(m);
    return combo<T>({{c, &in.w_b}, {-one, &nested_at(in, m - 1)}});
}

template <class T>
Vec<T> sigma(const CorollaryInputs<T>& in, unsigned m) {
    const T one(1);
    return combo<T>({{one, &nested_at(in, m)}, {-num<T>(m + 2) / in.length, &nested_at(in, m + 1)}});
}

template <class T>
Vec<T> psi(const CorollaryInputs<T>& in, unsigned m, PsiForm form) {
    const T one(1);
    const T h = in.length;
    if (form == PsiForm::derived) {
        const Vec<T> t1 = theta_tilde(in, m + 1);
        const Vec<T> t0 = theta_tilde(in, m);
        return combo<T>({{num<T>(m + 2) / h, &t1}, {-one, &t0}});
    }
    if (m == 0) throw InvalidInput("the printed Ψ_m needs m >= 1");
    const Vec<T> tm1 = theta_tilde(in, m - 1);
    const Vec<T> tm = theta_tilde(in, m);
    return combo<T>({{-power(h, m) / fact<T>(m + 1), &in.w_b}, {-one, &tm1}, {num<T>(m + 2) / h, &tm}});
}

template <class T>
WeightedTerm<T> term(std::string name, T coefficient, Vec<T> v, bool pi = false) {
    return WeightedTerm<T>{std::move(name), std::move(coefficient), std::move(v), pi};
}

bool is_derivative_id(CorollaryId id) {
    switch (id) {
        case CorollaryId::C7:
        case CorollaryId::C8:
        case CorollaryId::C9:
        case CorollaryId::C10:
        case CorollaryId::C11:
        case CorollaryId::PiSquaredC8:
        case CorollaryId::JfiCoefC10:
            return true;
        default:
            return false;
    }
}

// Highest nested-integral index the closed form reads.
unsigned nested_needed(CorollaryId id, const CorollaryParams& p) {
    switch (id) {
        case CorollaryId::C3:
            return p.weight;
        case CorollaryId::C4:
        case CorollaryId::JfiCoefC4:
            return p.weight + 1;
        case CorollaryId::C9:
            return p.weight == 0 ? 0 : p.weight - 1;
        case CorollaryId::C10:
        case CorollaryId::JfiCoefC10:
            return p.weight;
        default:
            return 2;
    }
}

void check_interval(CorollaryId id, const Interval& iv) {
    if (id == CorollaryId::C6 && !iv.b().is_zero())
        throw InvalidInput("C6 requires the interval (-h, 0), got [" + iv.a().str() + ", " + iv.b().str() + "]");
}

}  // namespace

std::string_view to_string(CorollaryId id) {
    for (const auto& [k, v] : kNames)
        if (k == id) return v;
    return "?";
}

std::optional<CorollaryId> parse_corollary_id(std::string_view name) {
    for (const auto& [k, v] : kNames)
        if (v == name) return k;
    return std::nullopt;
}

std::vector<CorollaryId> all_corollaries() {
    return {CorollaryId::C1, CorollaryId::C2, CorollaryId::C3, CorollaryId::C4,  CorollaryId::C5, CorollaryId::C6,
            CorollaryId::C7, CorollaryId::C8, CorollaryId::C9, CorollaryId::C10, CorollaryId::C11};
}

bool is_comparison(CorollaryId id) {
    return id == CorollaryId::ParkC5 || id == CorollaryId::PiSquaredC8 || id == CorollaryId::JfiCoefC4 ||
           id == CorollaryId::JfiCoefC10;
}

Pinned pinned(CorollaryId id, const CorollaryParams& p) {
    switch (id) {
        case CorollaryId::C1: return {2, 0, false, false};
        case CorollaryId::C2: return {1, 0, false, false};
        case CorollaryId::C3: return {0, p.weight, false, true};
        case CorollaryId::C4: return {1, p.weight, false, true};
        case CorollaryId::C5: return {1, 1, false, false};
        case CorollaryId::C6: return {p.degree, 0, false, false};
        case CorollaryId::C7: return {2, 0, true, false};
        case CorollaryId::C8: return {1, 0, true, false};
        case CorollaryId::C9: return {0, p.weight, true, true};
        case CorollaryId::C10: return {1, p.weight, true, true};
        case CorollaryId::C11: return {1, 1, true, false};
        case CorollaryId::ParkC5: return {1, 1, false, false};
        case CorollaryId::PiSquaredC8: return {1, 0, true, false};
        case CorollaryId::JfiCoefC4: return {1, p.weight, false, true};
        case CorollaryId::JfiCoefC10: return {1, p.weight, true, true};
    }
    throw InvalidInput("unknown corollary id");
}

CorollaryId dominating(CorollaryId comparison) {
    switch (comparison) {
        case CorollaryId::ParkC5: return CorollaryId::C5;
        case CorollaryId::PiSquaredC8: return CorollaryId::C8;
        case CorollaryId::JfiCoefC4: return CorollaryId::C4;
        case CorollaryId::JfiCoefC10: return CorollaryId::C10;
        default: throw InvalidInput(std::string(to_string(comparison)) + " is not a comparison bound");
    }
}

// ---- inputs ----------------------------------------------------------------

CorollaryInputs<Rational> corollary_inputs(const PolynomialSignal& w, unsigned max_nested, unsigned legendre_degree) {
    const Interval& iv = w.interval();
    CorollaryInputs<Rational> in;
    in.length = iv.length();
    for (unsigned j = 0; j <= max_nested; ++j) in.nested.push_back(nested_moment(w, j));
    in.w_a = w.at(iv.a());
    in.w_b = w.at(iv.b());
    if (iv.b().is_zero()) {
        for (unsigned k = 0; k <= legendre_degree; ++k) {
            const ShiftedPolynomial L = legendre_oracle(k, in.length);
            std::vector<Rational> proj;
            for (const auto& c : w.components())
                proj.push_back(integrate_weighted(L * rebase(c, Anchor::left, iv), 0, iv));
            in.legendre.push_back(std::move(proj));
        }
    }
    return in;
}

CorollaryInputs<double> corollary_inputs(const Signal& w, unsigned max_nested, unsigned legendre_degree,
                                         const QuadratureConfig& q) {
    const Interval& iv = w.interval();
    const std::size_t n = w.dim();
    CorollaryInputs<double> in;
    in.length = iv.length().to_double();
    in.w_a = w.at(iv.a().to_double());
    in.w_b = w.at(iv.b().to_double());

    BasisConfig cfg{iv, 0, max_nested, Anchor::left, Caps{std::max(max_nested, 10u), 12}};
    const auto f = moments(w, cfg, q);
    for (unsigned j = 0; j <= max_nested; ++j) {
        const double jf = std::tgamma(j + 1.0);
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = f.at(j, i) / jf;
        in.nested.push_back(std::move(v));
    }

    if (iv.b().is_zero()) {
        std::vector<std::vector<double>> lc;
        for (unsigned k = 0; k <= legendre_degree; ++k) {
            const ShiftedPolynomial L = legendre_oracle(k, iv.length());
            std::vector<double> c;
            for (const auto& x : L.coefficients()) c.push_back(x.to_double());
            lc.push_back(std::move(c));
        }
        const double a = iv.a().to_double();
        const auto integrand = [&](double s, std::span<double> out) {
            const auto ws = w.at(s);
            for (std::size_t k = 0; k < lc.size(); ++k) {
                double lk = 0.0;
                for (auto it = lc[k].rbegin(); it != lc[k].rend(); ++it) lk = lk * (s - a) + *it;
                for (std::size_t i = 0; i < n; ++i) out[k * n + i] = lk * ws[i];
            }
        };
        const auto r = integrate_vector(integrand, lc.size() * n, a, 0.0, q);
        for (std::size_t k = 0; k < lc.size(); ++k)
            in.legendre.emplace_back(r.values.begin() + static_cast<long>(k * n),
                                     r.values.begin() + static_cast<long>((k + 1) * n));
    }
    return in;
}

// ---- closed forms ----------------------------------------------------------

template <class T>
std::vector<WeightedTerm<T>> corollary_terms(CorollaryId id, const CorollaryInputs<T>& in, const CorollaryParams& p) {
    const T one(1);
    const T h = in.length;
    const unsigned m = p.weight;
    std::vector<WeightedTerm<T>> out;

    const auto omega = [&](unsigned k) -> Vec<T> {
        const Vec<T>& o0 = nested_at(in, 0);
        switch (k) {
            case 0: return o0;
            case 1: return combo<T>({{one, &o0}, {-num<T>(2) / h, &nested_at(in, 1)}});
            case 2:
                return combo<T>(
                    {{one, &o0}, {-num<T>(6) / h, &nested_at(in, 1)}, {num<T>(12) / (h * h), &nested_at(in, 2)}});
            case 3: return nested_at(in, 1);
            default: return combo<T>({{one, &nested_at(in, 1)}, {-num<T>(3) / h, &nested_at(in, 2)}});
        }
    };
    const auto theta = [&](unsigned k) -> Vec<T> {
        const Vec<T>& o0 = nested_at(in, 0);
        switch (k) {
            case 0: return combo<T>({{one, &in.w_b}, {-one, &in.w_a}});
            case 1: return combo<T>({{one, &in.w_b}, {one, &in.w_a}, {-num<T>(2) / h, &o0}});
            case 2:
                return combo<T>({{one, &in.w_b},
                                 {-one, &in.w_a},
                                 {num<T>(6) / h, &o0},
                                 {-num<T>(12) / (h * h), &nested_at(in, 1)}});
            case 3: return combo<T>({{one, &in.w_b}, {-one / h, &o0}});
            default:
                return combo<T>({{one, &in.w_b}, {num<T>(2) / h, &o0}, {-num<T>(6) / (h * h), &nested_at(in, 1)}});
        }
    };
    const T nested_lead = fact<T>(m + 1) / power(h, m + 1);

    switch (id) {
        case CorollaryId::C1:
            out.push_back(term("Omega0", one / h, omega(0)));
            out.push_back(term("Omega1", num<T>(3) / h, omega(1)));
            out.push_back(term("Omega2", num<T>(5) / h, omega(2)));
            break;
        case CorollaryId::C2:
            out.push_back(term("Omega0", one / h, omega(0)));
            out.push_back(term("Omega1", num<T>(3) / h, omega(1)));
            break;
        case CorollaryId::C3:
            out.push_back(term("OmegaTilde_m", nested_lead, nested_at(in, m)));
            break;
        case CorollaryId::C4:
            out.push_back(term("OmegaTilde_m", nested_lead, nested_at(in, m)));
            out.push_back(term("Sigma_m", nested_lead * num<T>((m + 3) * (m + 1)), sigma(in, m)));
            break;
        case CorollaryId::JfiCoefC4:
            out.push_back(term("OmegaTilde_m", nested_lead, nested_at(in, m)));
            out.push_back(term("Sigma_m", fact<T>(m) * num<T>(m + 3) / power(h, m + 1), sigma(in, m)));
            break;
        case CorollaryId::C5:
            out.push_back(term("Omega3", num<T>(2) / (h * h), omega(3)));
            out.push_back(term("Omega4", num<T>(16) / (h * h), omega(4)));
            break;
        case CorollaryId::ParkC5:
            out.push_back(term("Omega3", num<T>(2) / (h * h), omega(3)));
            out.push_back(term("Omega4", num<T>(4) / (h * h), omega(4)));
            break;
        case CorollaryId::C6:
            if (in.legendre.size() < p.degree + 1) throw InvalidInput("C6 inputs lack Legendre projections");
            for (unsigned k = 0; k <= p.degree; ++k)
                out.push_back(term("OmegaHat" + std::to_string(k), num<T>(2 * k + 1) / h, in.legendre[k]));
            break;
        case CorollaryId::C7:
            out.push_back(term("Theta0", one / h, theta(0)));
            out.push_back(term("Theta1", num<T>(3) / h, theta(1)));
            out.push_back(term("Theta2", num<T>(5) / h, theta(2)));
            break;
        case CorollaryId::C8:
            out.push_back(term("Theta0", one / h, theta(0)));
            out.push_back(term("Theta1", num<T>(3) / h, theta(1)));
            break;
        case CorollaryId::PiSquaredC8:
            out.push_back(term("Theta0", one / h, theta(0)));
            out.push_back(term("Theta1", one / h, theta(1), true));
            break;
        case CorollaryId::C9:
            out.push_back(term("ThetaTilde_m", nested_lead, theta_tilde(in, m)));
            break;
        case CorollaryId::C10:
            out.push_back(term("ThetaTilde_m", nested_lead, theta_tilde(in, m)));
            out.push_back(term("Psi_m", nested_lead * num<T>((m + 1) * (m + 3)), psi(in, m, p.psi)));
            break;
        case CorollaryId::JfiCoefC10:
            out.push_back(term("ThetaTilde_m", nested_lead, theta_tilde(in, m)));
            out.push_back(term("Psi_m", fact<T>(m) * num<T>(m + 3) / power(h, m + 1), psi(in, m, p.psi)));
            break;
        case CorollaryId::C11:
            out.push_back(term("Theta3", num<T>(2), theta(3)));
            out.push_back(term("Theta4", num<T>(4), theta(4)));
            break;
    }
    return out;
}

template std::vector<WeightedTerm<Rational>> corollary_terms(CorollaryId, const CorollaryInputs<Rational>&,
                                                             const CorollaryParams&);
template std::vector<WeightedTerm<double>> corollary_terms(CorollaryId, const CorollaryInputs<double>&,
                                                           const CorollaryParams&);

const Rational& CorollaryValue::exact() const {
    if (!is_rational()) throw InvalidInput("value involves π² and has no exact rational form");
    return rational;
}

double CorollaryValue::approx() const {
    return rational.to_double() + std::numbers::pi * std::numbers::pi / 4.0 * pi_part.to_double();
}

CorollaryValue corollary_bound(CorollaryId id, const PolynomialSignal& w, const RationalMatrix& R,
                               const CorollaryParams& params) {
    check_interval(id, w.interval());
    if (R.rows() != w.dim() || !spd_check(R).positive_definite) throw InvalidInput("R is not positive definite");
    const auto in = corollary_inputs(w, nested_needed(id, params), id == CorollaryId::C6 ? params.degree : 0);
    CorollaryValue v;
    for (const auto& t : corollary_terms(id, in, params)) {
        const Rational q = t.coefficient * R.quadratic(t.vector);
        (t.times_pi_squared_quarter ? v.pi_part : v.rational) += q;
    }
    return v;
}

double corollary_bound(CorollaryId id, const Signal& w, const RealMatrix& R, const CorollaryParams& params,
                       const QuadratureConfig& q) {
    check_interval(id, w.interval());
    if (R.rows() != w.dim() || !spd_check(R).positive_definite) throw InvalidInput("R is not positive definite");
    if (is_derivative_id(id) && !w.has_derivative())
        throw InvalidInput(std::string(to_string(id)) + " bounds the derivative energy; the signal has no derivative");
    const auto in = corollary_inputs(w, nested_needed(id, params), id == CorollaryId::C6 ? params.degree : 0, q);
    double v = 0.0;
    for (const auto& t : corollary_terms(id, in, params)) {
        double c = t.coefficient;
        if (t.times_pi_squared_quarter) c *= std::numbers::pi * std::numbers::pi / 4.0;
        v += c * R.quadratic(t.vector);
    }
    return v;
}

Rational energy_scale(CorollaryId id, const CorollaryParams& params) {
    const Pinned pin = pinned(id, params);
    return pin.nested ? factorial(pin.weight) : Rational(1);
}

Rational corollary_energy(CorollaryId id, const PolynomialSignal& w, const RationalMatrix& R,
                          const CorollaryParams& params) {
    const Pinned pin = pinned(id, params);
    return energy(pin.derivative ? w.derivative() : w, R, pin.weight);
}

Rational generic_bound(CorollaryId id, const PolynomialSignal& w, const RationalMatrix& R,
                       const CorollaryParams& params) {
    const Pinned pin = pinned(id, params);
    const BasisConfig cfg{w.interval(), pin.weight, pin.degree};
    return bound_xi_form(pin.derivative ? w.derivative() : w, R, cfg).bound;
}

// ---- crosschecks -----------------------------------------------------------

namespace {

unsigned draw_weight(CorollaryId id, TrialRng& rng) {
    switch (id) {
        case CorollaryId::C3:
        case CorollaryId::C9: return static_cast<unsigned>(rng.uniform(0, 4));
        case CorollaryId::C4:
        case CorollaryId::JfiCoefC4: return static_cast<unsigned>(rng.uniform(0, 3));
        case CorollaryId::C10:
        case CorollaryId::JfiCoefC10: return static_cast<unsigned>(rng.uniform(1, 3));
        default: return 0;
    }
}

Interval draw_interval(CorollaryId id, TrialRng& rng) {
    if (id == CorollaryId::C6) {
        const Rational h(rng.uniform(1, 12), rng.uniform(1, 6));
        return Interval(-h, Rational(0));
    }
    return random_interval(rng);
}

}  // namespace

CrosscheckReport crosscheck(CorollaryId id, const CrosscheckOptions& opts) {
    if (is_comparison(id)) throw InvalidInput("crosscheck applies to C1..C11; use dominance for comparison bounds");
    CrosscheckReport report;
    report.id = id;
    report.psi = opts.psi;
    report.trials = opts.trials;
    for (std::size_t t = 0; t < opts.trials; ++t) {
        TrialRng rng(opts.seed, t);
        CorollaryParams params;
        params.psi = opts.psi;
        params.weight = opts.weight.value_or(draw_weight(id, rng));
        params.degree = opts.degree.value_or(id == CorollaryId::C6 ? static_cast<unsigned>(rng.uniform(0, 5)) : 0);
        const Interval iv = draw_interval(id, rng);
        const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(opts.max_dim)));
        const PolynomialSignal w = random_signal(rng, iv, n, opts.max_signal_degree);
        const RationalMatrix R = random_spd(rng, n);

        const Pinned pin = pinned(id, params);
        const Rational closed = corollary_bound(id, w, R, params).exact() * energy_scale(id, params);
        const Rational generic = generic_bound(id, w, R, params);
        const Rational diff = (closed - generic).abs();
        if (diff > report.max_abs_discrepancy) report.max_abs_discrepancy = diff;

        std::string detail;
        if (!diff.is_zero()) detail = "closed form differs from the generic bound by " + diff.str();
        if (detail.empty() && pin.derivative) {
            const BasisConfig cfg{iv, pin.weight, pin.degree};
            if (derivative_bound(w, R, cfg) != generic) detail = "endpoint route disagrees with the differentiated signal";
        }
        if (detail.empty()) {
            ++report.exact_matches;
            continue;
        }
        report.failures.push_back(CrosscheckFailure{t, pin.weight, pin.degree, detail, closed.str(), generic.str(),
                                                    to_json_string(w), to_json_string(R)});
    }
    return report;
}

DominanceReport dominance(CorollaryId comparison, std::size_t trials, std::uint64_t seed) {
    DominanceReport r;
    r.weaker = comparison;
    r.stronger = dominating(comparison);
    r.trials = trials;
    r.min_difference = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < trials; ++t) {
        TrialRng rng(seed, t);
        CorollaryParams params;
        params.weight = draw_weight(comparison, rng);
        const Interval iv = random_interval(rng);
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const PolynomialSignal w = random_signal(rng, iv, n, 6);
        const RationalMatrix R = random_spd(rng, n);
        const Rational h = iv.length();
        const unsigned m = params.weight;

        const CorollaryValue strong = corollary_bound(r.stronger, w, R, params);
        const CorollaryValue weak = corollary_bound(comparison, w, R, params);
        const auto in = corollary_inputs(w, nested_needed(r.stronger, params), 0);

        if (comparison == CorollaryId::PiSquaredC8) {
            // Exact bookkeeping: the difference is (3 - π²/4)/h Θ1ᵀRΘ1, rounded only at the end.
            const Rational q1 = R.quadratic(corollary_terms(CorollaryId::C8, in, params)[1].vector) / h;
            const CorollaryValue diff{strong.rational - weak.rational, strong.pi_part - weak.pi_part};
            const double d = diff.approx();
            r.min_difference = std::min(r.min_difference, d);
            if (d < -1e-12) ++r.violations;
            if (diff.rational != Rational(3) * q1 || diff.pi_part != -q1) ++r.formula_mismatches;
            continue;
        }

        const Rational diff = strong.exact() - weak.exact();
        r.min_difference = std::min(r.min_difference, diff.to_double());
        if (diff.sign() < 0) ++r.violations;
        Rational expected;
        switch (comparison) {
            case CorollaryId::ParkC5: {
                const auto o4 = corollary_terms(CorollaryId::C5, in, params)[1].vector;
                expected = Rational(12) / (h * h) * R.quadratic(o4);
                break;
            }
            case CorollaryId::JfiCoefC4:
            case CorollaryId::JfiCoefC10: {
                const auto v = corollary_terms(r.stronger, in, params)[1].vector;
                const Rational c = factorial(m) * Rational(static_cast<long>((m + 1) * (m + 1) * (m + 3) - (m + 3))) /
                                   h.pow(m + 1);
                expected = c * R.quadratic(v);
                break;
            }
            default: break;
        }
        if (diff != expected) ++r.formula_mismatches;
    }
    if (trials == 0) r.min_difference = 0.0;
    return r;
}

BesselLegendreReport bessel_legendre_check(unsigned degree, const PolynomialSignal& w, const RationalMatrix& R) {
    check_interval(CorollaryId::C6, w.interval());
    const Rational h = w.interval().length();
    CorollaryParams params;
    params.degree = degree;
    BesselLegendreReport r;
    r.closed_form = corollary_bound(CorollaryId::C6, w, R, params).exact();
    const auto generic = bound_xi_form(w, R, BasisConfig{w.interval(), 0, degree});
    r.generic = generic.bound;
    r.energy = generic.energy;
    r.agree = r.closed_form == r.generic;
    r.normalization_ok = true;
    for (unsigned k = 0; k <= degree; ++k) {
        const ShiftedPolynomial L = legendre_oracle(k, h);
        if (integrate_weighted(L * L, 0, w.interval()) != h / Rational(static_cast<long>(2 * k + 1)))
            r.normalization_ok = false;
    }
    return r;
}

}  // namespace wop
