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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wop/bound.hpp"

namespace wop {

/*
 * Closed-form special cases of the weighted bound and the older bounds they
 * are compared with. Each id pins (N, m, signal kind):
 *
 *   C1  N=2 m=0 w      C7  N=2 m=0 ẇ
 *   C2  N=1 m=0 w      C8  N=1 m=0 ẇ
 *   C3  N=0 m   w  *   C9  N=0 m   ẇ  *
 *   C4  N=1 m   w  *   C10 N=1 m   ẇ  *
 *   C5  N=1 m=1 w      C11 N=1 m=1 ẇ
 *   C6  N   m=0 w on (-h, 0), Legendre form
 *
 *   ParkC5 (vs C5), PiSquaredC8 (vs C8), JfiCoefC4 (vs C4), JfiCoefC10 (vs C10)
 *
 * Ids marked * bound the m-fold nested integral, i.e. energy / m!.
 */
enum class CorollaryId { C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, ParkC5, PiSquaredC8, JfiCoefC4, JfiCoefC10 };

std::string_view to_string(CorollaryId id);
std::optional<CorollaryId> parse_corollary_id(std::string_view name);
std::vector<CorollaryId> all_corollaries();  // C1..C11
bool is_comparison(CorollaryId id);

/// Which closed form of the C10 second-term vector to use.
enum class PsiForm { derived, printed };

struct CorollaryParams {
    unsigned weight = 0;  // m for C3, C4, C9, C10 and their comparisons
    unsigned degree = 0;  // N for C6
    PsiForm psi = PsiForm::derived;
};

struct Pinned {
    unsigned degree;
    unsigned weight;
    bool derivative;  // bounds the energy of ẇ
    bool nested;      // right-hand side bounds energy / m!
};

Pinned pinned(CorollaryId id, const CorollaryParams& params);

/// Data every closed form is built from: nested integrals of w, endpoint values, Legendre projections.
template <class T>
struct CorollaryInputs {
    T length{};
    std::vector<std::vector<T>> nested;    // nested[j] = j-fold nested integral of w (j = 0: ∫ w)
    std::vector<T> w_a;
    std::vector<T> w_b;
    std::vector<std::vector<T>> legendre;  // legendre[k] = ∫_{-h}^0 L_k w
};

/// Exact inputs; nested integrals by literal repeated integration.
CorollaryInputs<Rational> corollary_inputs(const PolynomialSignal& w, unsigned max_nested, unsigned legendre_degree);
/// Quadrature inputs; nested integrals via the moment identity m! Ω̃_m = ∫ (s-a)^m w.
CorollaryInputs<double> corollary_inputs(const Signal& w, unsigned max_nested, unsigned legendre_degree,
                                         const QuadratureConfig& q);

/// One summand coefficient * vᵀ R v; flagged summands carry an extra factor π²/4.
template <class T>
struct WeightedTerm {
    std::string name;
    T coefficient{};
    std::vector<T> vector;
    bool times_pi_squared_quarter = false;
};

/// The named vectors and coefficients of a closed form, in printed order.
template <class T>
std::vector<WeightedTerm<T>> corollary_terms(CorollaryId id, const CorollaryInputs<T>& in, const CorollaryParams& p);

extern template std::vector<WeightedTerm<Rational>> corollary_terms(CorollaryId, const CorollaryInputs<Rational>&,
                                                                    const CorollaryParams&);
extern template std::vector<WeightedTerm<double>> corollary_terms(CorollaryId, const CorollaryInputs<double>&,
                                                                  const CorollaryParams&);

/// Exact value rational + (π²/4) * pi_part; pi_part is zero except for PiSquaredC8.
struct CorollaryValue {
    Rational rational;
    Rational pi_part;

    bool is_rational() const { return pi_part.is_zero(); }
    /// Throws InvalidInput if a π² term is present.
    const Rational& exact() const;
    double approx() const;
};

/// Printed right-hand side. Throws InvalidInput on id/interval mismatch (C6 needs b = 0).
CorollaryValue corollary_bound(CorollaryId id, const PolynomialSignal& w, const RationalMatrix& R,
                               const CorollaryParams& params);
double corollary_bound(CorollaryId id, const Signal& w, const RealMatrix& R, const CorollaryParams& params,
                       const QuadratureConfig& q);

/// Convenience alias for the comparison ids.
inline CorollaryValue comparison_bound(CorollaryId id, const PolynomialSignal& w, const RationalMatrix& R,
                                       const CorollaryParams& params) {
    return corollary_bound(id, w, R, params);
}

/// Multiply by m! for nested-convention ids, so values compare with energies directly.
Rational energy_scale(CorollaryId id, const CorollaryParams& params);

/// Left-hand side on the energy scale: I_m(w) or I_m(ẇ) at the pinned configuration.
Rational corollary_energy(CorollaryId id, const PolynomialSignal& w, const RationalMatrix& R,
                          const CorollaryParams& params);

/// Generic weighted bound at the pinned configuration, on the energy scale.
Rational generic_bound(CorollaryId id, const PolynomialSignal& w, const RationalMatrix& R,
                       const CorollaryParams& params);

// ---- crosschecks -----------------------------------------------------------

struct CrosscheckOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 0x5EED;
    PsiForm psi = PsiForm::derived;
    std::optional<unsigned> weight;  // otherwise drawn per trial from the id's range
    std::optional<unsigned> degree;  // C6 only
    unsigned max_signal_degree = 6;
    std::size_t max_dim = 3;
};

struct CrosscheckFailure {
    std::size_t trial = 0;
    unsigned weight = 0;
    unsigned degree = 0;
    std::string detail;
    std::string closed_form;
    std::string generic;
    std::string signal_json;
    std::string R_json;
};

struct CrosscheckReport {
    CorollaryId id = CorollaryId::C1;
    PsiForm psi = PsiForm::derived;
    std::size_t trials = 0;
    std::size_t exact_matches = 0;
    Rational max_abs_discrepancy;
    std::vector<CrosscheckFailure> failures;
};

/// Closed form vs generic bound on random rational polynomial signals, exact equality required.
/// ẇ ids additionally check the endpoint route (derivative_moments) against the differentiated signal.
CrosscheckReport crosscheck(CorollaryId id, const CrosscheckOptions& opts);

struct DominanceReport {
    CorollaryId stronger = CorollaryId::C5;
    CorollaryId weaker = CorollaryId::ParkC5;
    std::size_t trials = 0;
    std::size_t violations = 0;       // stronger - weaker < 0 (beyond 1e-12 where π enters)
    std::size_t formula_mismatches = 0;  // difference differs from its stated quadratic form
    double min_difference = 0.0;
};

/// Stronger bound minus the comparison bound on random signals, with the closed-form difference checked.
DominanceReport dominance(CorollaryId comparison, std::size_t trials, std::uint64_t seed);

/// The stronger corollary a comparison id is measured against.
CorollaryId dominating(CorollaryId comparison);

struct BesselLegendreReport {
    Rational closed_form;
    Rational generic;
    Rational energy;
    bool agree = false;
    bool normalization_ok = false;  // ∫ L_k² = h / (2k+1) for k <= N
};

BesselLegendreReport bessel_legendre_check(unsigned degree, const PolynomialSignal& w, const RationalMatrix& R);

}  // namespace wop
