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

#include "wop/moments.hpp"

#include <cmath>
#include <sstream>

#include "wop/errors.hpp"

namespace wop {

namespace {

// Block k = ∫ x^(m+k) w, x the orientation's shifted variable; no caps applied.
MomentVector<Rational> raw_moments(const PolynomialSignal& w, unsigned weight, std::size_t blocks,
                                   Anchor orientation) {
    const Interval& iv = w.interval();
    MomentVector<Rational> f(blocks, w.dim(), weight, orientation);
    for (std::size_t i = 0; i < w.dim(); ++i) {
        const ShiftedPolynomial c = rebase(w.component(i), orientation, iv);
        for (std::size_t k = 0; k < blocks; ++k)
            f.at(k, i) = integrate_weighted(c, weight + static_cast<unsigned>(k), iv, orientation);
    }
    return f;
}

double shifted_variable(double s, const Interval& iv, Anchor orientation) {
    return orientation == Anchor::left ? s - iv.a().to_double() : iv.b().to_double() - s;
}

double ipow(double x, unsigned e) {
    double r = 1.0;
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

ShiftedPolynomial quadratic_form(const PolynomialSignal& w, const RationalMatrix& R) {
    if (R.rows() != w.dim() || R.cols() != w.dim()) throw InvalidInput("R dimension does not match the signal");
    const Anchor anchor = w.component(0).anchor();
    ShiftedPolynomial q(anchor);
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            if (!R(i, j).is_zero()) q = q + R(i, j) * (w.component(i) * w.component(j));
    return q;
}

}  // namespace

MomentVector<Rational> moments(const PolynomialSignal& w, const BasisConfig& cfg) {
    cfg.validate();
    if (!(w.interval() == cfg.interval)) throw InvalidInput("signal and basis intervals differ");
    return raw_moments(w, cfg.weight, cfg.degree + 1, cfg.orientation);
}

MomentVector<double> moments(const Signal& w, const BasisConfig& cfg, const QuadratureConfig& q) {
    cfg.validate();
    if (!(w.interval() == cfg.interval)) throw InvalidInput("signal and basis intervals differ");
    const std::size_t n = w.dim();
    const std::size_t blocks = cfg.degree + 1;
    const Interval iv = cfg.interval;
    const auto integrand = [&](double s, std::span<double> out) {
        const std::vector<double> ws = w.at(s);
        const double x = shifted_variable(s, iv, cfg.orientation);
        double xp = ipow(x, cfg.weight);
        for (std::size_t k = 0; k < blocks; ++k) {
            for (std::size_t i = 0; i < n; ++i) out[k * n + i] = xp * ws[i];
            xp *= x;
        }
    };
    const auto r = integrate_vector(integrand, blocks * n, iv.a().to_double(), iv.b().to_double(), q);
    MomentVector<double> f(blocks, n, cfg.weight, cfg.orientation);
    f.entries = r.values;
    return f;
}

ProjectionVector<Rational> projections(const PolynomialSignal& w, const WopBasis& basis) {
    const BasisConfig& cfg = basis.config();
    if (!(w.interval() == cfg.interval)) throw InvalidInput("signal and basis intervals differ");
    const std::size_t n = w.dim();
    ProjectionVector<Rational> direct(basis.degree() + 1, n, cfg.weight, cfg.orientation);
    for (std::size_t i = 0; i < n; ++i) {
        const ShiftedPolynomial c = rebase(w.component(i), cfg.orientation, cfg.interval);
        for (unsigned k = 0; k <= basis.degree(); ++k)
            direct.at(k, i) = integrate_weighted(basis.poly(k) * c, cfg.weight, cfg.interval, cfg.orientation);
    }
    const ProjectionVector<Rational> via_g = project_moments(moments(w, cfg), invert_unit_lower(basis.G()));
    if (!(direct == via_g))
        throw InternalConsistencyError("projections: direct integration disagrees with (Ginv ⊗ I) F");
    return direct;
}

ProjectionVector<double> projections(const Signal& w, const WopBasis& basis, const QuadratureConfig& q) {
    const BasisConfig& cfg = basis.config();
    if (!(w.interval() == cfg.interval)) throw InvalidInput("signal and basis intervals differ");
    const std::size_t n = w.dim();
    const std::size_t blocks = basis.degree() + 1;
    const Interval iv = cfg.interval;

    std::vector<std::vector<double>> coeffs(blocks);
    for (std::size_t k = 0; k < blocks; ++k)
        for (const auto& c : basis.poly(static_cast<unsigned>(k)).coefficients()) coeffs[k].push_back(c.to_double());

    // First half: direct projections; second half: monomial moments.
    const std::size_t half = blocks * n;
    const auto integrand = [&](double s, std::span<double> out) {
        const std::vector<double> ws = w.at(s);
        const double x = shifted_variable(s, iv, cfg.orientation);
        const double weight = ipow(x, cfg.weight);
        double xp = weight;
        for (std::size_t k = 0; k < blocks; ++k) {
            double pk = 0.0;
            for (auto it = coeffs[k].rbegin(); it != coeffs[k].rend(); ++it) pk = pk * x + *it;
            for (std::size_t i = 0; i < n; ++i) {
                out[k * n + i] = weight * pk * ws[i];
                out[half + k * n + i] = xp * ws[i];
            }
            xp *= x;
        }
    };
    const auto r = integrate_vector(integrand, 2 * half, iv.a().to_double(), iv.b().to_double(), q);

    ProjectionVector<double> direct(blocks, n, cfg.weight, cfg.orientation);
    MomentVector<double> f(blocks, n, cfg.weight, cfg.orientation);
    for (std::size_t e = 0; e < half; ++e) {
        direct.entries[e] = r.values[e];
        f.entries[e] = r.values[half + e];
    }
    const RealMatrix ginv = to_real(invert_unit_lower(basis.G()));
    const ProjectionVector<double> via_g = project_moments(f, ginv);

    for (std::size_t k = 0; k < blocks; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            double scale = r.abs_values[k * n + i];
            for (std::size_t j = 0; j <= k; ++j) scale += std::abs(ginv(k, j)) * r.abs_values[half + j * n + i];
            const double diff = std::abs(direct.at(k, i) - via_g.at(k, i));
            if (diff > 10.0 * q.relative_tolerance * scale) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "projections: quadrature routes disagree at block " << k << ", component " << i << ": "
                    << direct.at(k, i) << " vs " << via_g.at(k, i);
                throw InternalConsistencyError(msg.str());
            }
        }
    return direct;
}

Rational energy(const PolynomialSignal& w, const RationalMatrix& R, unsigned m, Anchor orientation) {
    return integrate_weighted(quadratic_form(w, R), m, w.interval(), orientation);
}

double energy(const Signal& w, const RealMatrix& R, unsigned m, Anchor orientation, const QuadratureConfig& q) {
    const std::size_t n = w.dim();
    if (R.rows() != n || R.cols() != n) throw InvalidInput("R dimension does not match the signal");
    const Interval iv = w.interval();
    const auto integrand = [&](double s, std::span<double> out) {
        const std::vector<double> ws = w.at(s);
        out[0] = ipow(shifted_variable(s, iv, orientation), m) * R.quadratic(ws);
    };
    return integrate_vector(integrand, 1, iv.a().to_double(), iv.b().to_double(), q).values[0];
}

Rational nested_energy_oracle(const PolynomialSignal& w, const RationalMatrix& R, unsigned m) {
    const Interval& iv = w.interval();
    ShiftedPolynomial t = quadratic_form(w, R);
    // m inner tail integrals, then the outer integral over [a, b] is the next tail at theta = a.
    for (unsigned i = 0; i <= m; ++i) t = tail_integral(t, iv);
    return evaluate(t, iv.a(), iv);
}

std::vector<Rational> nested_moment(const PolynomialSignal& w, unsigned m) {
    const Interval& iv = w.interval();
    std::vector<Rational> out;
    out.reserve(w.dim());
    for (const auto& c : w.components()) {
        ShiftedPolynomial t = c;
        for (unsigned i = 0; i <= m; ++i) t = tail_integral(t, iv);
        out.push_back(evaluate(t, iv.a(), iv));
    }
    return out;
}

MomentVector<Rational> derivative_moments(const PolynomialSignal& w, const BasisConfig& cfg) {
    cfg.validate();
    const Interval& iv = w.interval();
    const auto lower = raw_moments(w, 0, cfg.weight + cfg.degree, cfg.orientation);
    const auto wa = w.at(iv.a());
    const auto wb = w.at(iv.b());
    return derivative_moments<Rational>(wa, wb, lower, cfg, iv.length());
}

}  // namespace wop
