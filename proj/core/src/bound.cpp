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

#include "wop/bound.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wop/errors.hpp"

namespace wop {

namespace {

template <class T>
void require_symmetric(const Matrix<T>& R) {
    if (!R.is_square()) throw InvalidInput("R must be square");
    if (!R.is_symmetric()) throw InvalidInput("R must be symmetric");
}

void require_spd(const RationalMatrix& R, std::size_t n) {
    if (R.rows() != n) throw InvalidInput("R dimension does not match the signal");
    if (!spd_check(R).positive_definite) throw InvalidInput("R is not positive definite");
}

void require_spd(const RealMatrix& R, std::size_t n) {
    if (R.rows() != n) throw InvalidInput("R dimension does not match the signal");
    if (!spd_check(R).positive_definite) throw InvalidInput("R is not positive definite");
}

double float_gap_floor(double energy) { return -1e-9 * std::max(1.0, std::abs(energy)); }

ExactBound make_exact(Rational bound, Rational e, const BasisConfig& cfg) {
    Rational gap = e - bound;
    if (gap.sign() < 0)
        throw InternalConsistencyError("negative exact gap " + gap.str() + " (bound " + bound.str() + ", energy " +
                                       e.str() + ")");
    return ExactBound{std::move(bound), std::move(e), std::move(gap), cfg.degree, cfg.weight,
                      cfg.interval, cfg.orientation, EvaluationPath::exact};
}

RealBound make_real(double bound, double e, const BasisConfig& cfg) {
    const double gap = e - bound;
    if (gap < float_gap_floor(e)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "gap " << gap << " below the quadrature floor (bound " << bound << ", energy " << e << ")";
        throw InternalConsistencyError(msg.str());
    }
    return RealBound{bound, e, gap, cfg.degree, cfg.weight, cfg.interval, cfg.orientation, EvaluationPath::quadrature};
}

std::vector<Rational> inverse_chi(const WopBasis& basis) {
    std::vector<Rational> out;
    for (const auto& c : basis.chi()) out.push_back(c.inverse());
    return out;
}

std::vector<double> inverse_chi_real(const WopBasis& basis) {
    std::vector<double> out;
    for (const auto& c : basis.chi()) out.push_back(c.inverse().to_double());
    return out;
}

}  // namespace

std::string_view to_string(EvaluationPath path) { return path == EvaluationPath::exact ? "exact" : "quadrature"; }

SpdCheck spd_check(const RationalMatrix& R) {
    require_symmetric(R);
    const auto minors = leading_principal_minors(R);
    for (std::size_t k = 0; k < minors.size(); ++k)
        if (minors[k].sign() <= 0)
            return {false, "leading principal minor " + std::to_string(k + 1) + " is " + minors[k].str()};
    return {true, "all leading principal minors positive"};
}

SpdCheck spd_check(const RealMatrix& R) {
    require_symmetric(R);
    const std::size_t n = R.rows();
    double norm = 0.0;
    for (double x : R.entries()) norm = std::max(norm, std::abs(x));
    const double threshold = 1e-10 * norm;
    // Cholesky; a symmetric matrix is positive definite iff every pivot is positive.
    RealMatrix L(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = R(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
        if (!(d > threshold)) {
            std::ostringstream msg;
            msg << "Cholesky pivot " << j + 1 << " is " << d << " (threshold " << threshold << ")";
            return {false, msg.str()};
        }
        L(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = R(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            L(i, j) = s / L(j, j);
        }
    }
    return {true, "Cholesky factorization succeeded"};
}

ExactBound bound_xi_form(const PolynomialSignal& w, const RationalMatrix& R, const BasisConfig& cfg) {
    require_spd(R, w.dim());
    const WopBasis basis = gram_schmidt(cfg);
    const BoundMatrices bm = assemble_bound_matrices(basis);
    const auto f = moments(w, cfg);
    return make_exact(xi_form_value(f, bm.Xi, R), energy(w, R, cfg.weight, cfg.orientation), cfg);
}

RealBound bound_xi_form(const Signal& w, const RealMatrix& R, const BasisConfig& cfg, const QuadratureConfig& q) {
    require_spd(R, w.dim());
    const WopBasis basis = gram_schmidt(cfg);
    const auto f = moments(w, cfg, q);
    // Xi has large entries of alternating sign; the quadratic form is summed
    // exactly over the binary values of F and R so only quadrature error remains.
    MomentVector<Rational> fq(f.blocks, f.dim, f.weight, f.orientation);
    for (std::size_t k = 0; k < f.entries.size(); ++k) fq.entries[k] = Rational::from_double(f.entries[k]);
    RationalMatrix rq(R.rows(), R.cols());
    for (std::size_t i = 0; i < R.rows(); ++i)
        for (std::size_t j = 0; j < R.cols(); ++j) rq(i, j) = Rational::from_double(R(i, j));
    const double value = xi_form_value(fq, assemble_bound_matrices(basis).Xi, rq).to_double();
    return make_real(value, energy(w, R, cfg.weight, cfg.orientation, q), cfg);
}

ExactBound bound_pi_form(const PolynomialSignal& w, const RationalMatrix& R, const WopBasis& basis) {
    require_spd(R, w.dim());
    const auto pi = projections(w, basis);
    const auto inv = inverse_chi(basis);
    const BasisConfig& cfg = basis.config();
    return make_exact(pi_form_value<Rational>(pi, inv, R), energy(w, R, cfg.weight, cfg.orientation), cfg);
}

RealBound bound_pi_form(const Signal& w, const RealMatrix& R, const WopBasis& basis, const QuadratureConfig& q) {
    require_spd(R, w.dim());
    const auto pi = projections(w, basis, q);
    const auto inv = inverse_chi_real(basis);
    const BasisConfig& cfg = basis.config();
    return make_real(pi_form_value<double>(pi, inv, R), energy(w, R, cfg.weight, cfg.orientation, q), cfg);
}

Rational derivative_bound(const PolynomialSignal& w, const RationalMatrix& R, const BasisConfig& cfg) {
    require_spd(R, w.dim());
    const WopBasis basis = gram_schmidt(cfg);
    return xi_form_value(derivative_moments(w, cfg), assemble_bound_matrices(basis).Xi, R);
}

std::vector<ExactBound> tightness_sweep(const PolynomialSignal& w, const RationalMatrix& R, unsigned m,
                                        Anchor orientation, unsigned first, unsigned last, Caps caps) {
    if (first > last) throw InvalidInput("tightness_sweep: empty degree range");
    require_spd(R, w.dim());
    const BasisConfig top{w.interval(), m, last, orientation, caps};
    // The family is nested: p_0..p_N do not depend on the top degree.
    const WopBasis basis = gram_schmidt(top);
    const auto pi = projections(w, basis);
    const auto inv = inverse_chi(basis);
    const Rational e = energy(w, R, m, orientation);

    std::vector<Rational> terms;
    for (std::size_t k = 0; k <= last; ++k) terms.push_back(inv[k] * R.quadratic(pi.block(k)));

    std::vector<ExactBound> out;
    Rational running(0);
    for (unsigned k = 0; k < first; ++k) running += terms[k];
    for (unsigned N = first; N <= last; ++N) {
        running += terms[N];
        BasisConfig cfg = top;
        cfg.degree = N;
        ExactBound r = bound_xi_form(w, R, cfg);
        if (r.bound != running)
            throw InternalConsistencyError("tightness_sweep: Ξ-form at N = " + std::to_string(N) +
                                           " differs from the accumulated Π-form terms");
        if (!out.empty()) {
            const Rational increment = r.bound - out.back().bound;
            if (increment.sign() < 0 || increment != terms[N])
                throw InternalConsistencyError("tightness_sweep: increment identity fails at N = " +
                                               std::to_string(N));
        }
        if (r.energy != e) throw InternalConsistencyError("tightness_sweep: energy drifted across N");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RealBound> tightness_sweep(const Signal& w, const RealMatrix& R, unsigned m, Anchor orientation,
                                       unsigned first, unsigned last, const QuadratureConfig& q, Caps caps) {
    if (first > last) throw InvalidInput("tightness_sweep: empty degree range");
    require_spd(R, w.dim());
    const BasisConfig top{w.interval(), m, last, orientation, caps};
    const WopBasis basis = gram_schmidt(top);
    const auto pi = projections(w, basis, q);
    const auto inv = inverse_chi_real(basis);
    const double e = energy(w, R, m, orientation, q);

    std::vector<RealBound> out;
    double running = 0.0;
    for (unsigned k = 0; k <= last; ++k) {
        running += inv[k] * R.quadratic(pi.block(k));
        if (k < first) continue;
        BasisConfig cfg = top;
        cfg.degree = k;
        out.push_back(make_real(running, e, cfg));
    }
    return out;
}

PolynomialSignal residual_signal(const PolynomialSignal& w, const WopBasis& basis) {
    const auto pi = projections(w, basis);
    const BasisConfig& cfg = basis.config();
    std::vector<ShiftedPolynomial> out;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        ShiftedPolynomial z = rebase(w.component(i), cfg.orientation, cfg.interval);
        for (unsigned k = 0; k <= basis.degree(); ++k)
            z = z - (pi.at(k, i) / basis.chi()[k]) * basis.poly(k);
        out.push_back(std::move(z));
    }
    return PolynomialSignal(w.interval(), std::move(out));
}

}  // namespace wop
