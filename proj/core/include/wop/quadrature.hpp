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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wop {

struct QuadratureConfig {
    unsigned nodes_per_panel = 16;
    unsigned initial_panels = 4;
    double relative_tolerance = 1e-12;
    unsigned max_doublings = 12;

    void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(unsigned n);

struct QuadratureResult {
    double value = 0.0;
    double relative_change = 0.0;
    unsigned panels = 0;
};

/*
 * Composite Gauss-Legendre over [a, b]. The panel count starts at
 * initial_panels and doubles until two successive estimates differ by at
 * most relative_tolerance times the integral of |f| (so integrands with
 * cancelling mass still have a meaningful scale). Throws QuadratureError
 * carrying the last two estimates when max_doublings is exhausted.
 */
QuadratureResult quadrature_integrate(const std::function<double(double)>& f, double a, double b,
                                      const QuadratureConfig& cfg = {});

struct VectorQuadratureResult {
    std::vector<double> values;
    std::vector<double> abs_values;  // integrals of |f_i|, the error scale per component
    double relative_change = 0.0;
    unsigned panels = 0;
};

/// Vector-valued variant: f(s, out) fills out[0..dim). Convergence is required per component.
VectorQuadratureResult integrate_vector(const std::function<void(double, std::span<double>)>& f, std::size_t dim,
                                        double a, double b, const QuadratureConfig& cfg = {});

}  // namespace wop
