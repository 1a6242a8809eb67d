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

#include "wop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wop/errors.hpp"

namespace wop {

void QuadratureConfig::validate() const {
    if (nodes_per_panel == 0 || initial_panels == 0 || max_doublings == 0 || !(relative_tolerance > 0.0))
        throw InvalidInput("quadrature configuration values must all be positive");
}

GaussLegendreRule gauss_legendre(unsigned n) {
    if (n == 0) throw InvalidInput("gauss_legendre: need at least one node");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n from the Chebyshev-like initial guess; roots are symmetric.
    for (unsigned i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (unsigned k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute derivative at the converged root.
        double p0 = 1.0, p1 = x;
        for (unsigned k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

namespace {

// Fixed-order pairwise sum; keeps results bit-reproducible for a given panel count.
double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

struct Estimate {
    std::vector<double> values;
    std::vector<double> abs_values;
};

Estimate composite(const std::function<void(double, std::span<double>)>& f, std::size_t dim, double a, double b,
                   unsigned panels, const GaussLegendreRule& rule) {
    const double width = (b - a) / panels;
    std::vector<std::vector<double>> panel_sums(dim, std::vector<double>(panels, 0.0));
    std::vector<std::vector<double>> panel_abs(dim, std::vector<double>(panels, 0.0));
    std::vector<double> out(dim);
    for (unsigned p = 0; p < panels; ++p) {
        const double lo = a + width * p;
        const double mid = lo + 0.5 * width;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double s = mid + 0.5 * width * rule.nodes[i];
            std::fill(out.begin(), out.end(), 0.0);
            f(s, out);
            const double w = 0.5 * width * rule.weights[i];
            for (std::size_t c = 0; c < dim; ++c) {
                panel_sums[c][p] += w * out[c];
                panel_abs[c][p] += w * std::abs(out[c]);
            }
        }
    }
    Estimate e;
    e.values.reserve(dim);
    e.abs_values.reserve(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        e.values.push_back(pairwise_sum(panel_sums[c]));
        e.abs_values.push_back(pairwise_sum(panel_abs[c]));
    }
    return e;
}

}  // namespace

VectorQuadratureResult integrate_vector(const std::function<void(double, std::span<double>)>& f, std::size_t dim,
                                        double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    const GaussLegendreRule rule = gauss_legendre(cfg.nodes_per_panel);
    unsigned panels = cfg.initial_panels;
    Estimate prev = composite(f, dim, a, b, panels, rule);
    for (unsigned d = 0; d < cfg.max_doublings; ++d) {
        panels *= 2;
        Estimate cur = composite(f, dim, a, b, panels, rule);
        double worst = 0.0;
        std::size_t worst_c = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            if (!std::isfinite(cur.values[c]))
                throw QuadratureError("quadrature produced a non-finite value", prev.values[c], cur.values[c]);
            const double scale = cur.abs_values[c];
            const double change = std::abs(cur.values[c] - prev.values[c]);
            const double rel = scale > 0.0 ? change / scale : 0.0;
            if (rel > worst) worst = rel, worst_c = c;
        }
        if (worst <= cfg.relative_tolerance) {
            VectorQuadratureResult r;
            r.values = std::move(cur.values);
            r.abs_values = std::move(cur.abs_values);
            r.relative_change = worst;
            r.panels = panels;
            return r;
        }
        if (d + 1 == cfg.max_doublings) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "quadrature did not converge after " << cfg.max_doublings << " doublings (" << panels
                << " panels): component " << worst_c << " estimates " << prev.values[worst_c] << " and "
                << cur.values[worst_c] << ", relative change " << worst;
            throw QuadratureError(msg.str(), prev.values[worst_c], cur.values[worst_c]);
        }
        prev = std::move(cur);
    }
    throw QuadratureError("quadrature did not converge", prev.values.empty() ? 0.0 : prev.values[0], 0.0);
}

QuadratureResult quadrature_integrate(const std::function<double(double)>& f, double a, double b,
                                      const QuadratureConfig& cfg) {
    const auto r = integrate_vector([&f](double s, std::span<double> out) { out[0] = f(s); }, 1, a, b, cfg);
    return {r.values[0], r.relative_change, r.panels};
}

}  // namespace wop
