/* Copyright (C) 2026 The bohrlab Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOHRLAB_SOLVER_HPP
#define BOHRLAB_SOLVER_HPP

#include <string>
#include <utility>

#include "bohrlab/classes.hpp"

namespace bohrlab {

enum class RadiusMethod { closed_form, bisection, degenerate, limit };

std::string to_string(RadiusMethod method);

/// A computed Bohr radius with its certificate.
///
/// residual is |H(value)| for the defining equation H(r) = 0 the result was
/// solved from; tail_bound is the series truncation bound that entered H
/// (zero for polynomial equations). method == limit marks values returned
/// from a limiting branch (t -> 0+, rho -> 1-) rather than a root solve.
struct RadiusResult {
    double value = 0.0;
    RadiusMethod method = RadiusMethod::closed_form;
    double residual = 0.0;
    double tail_bound = 0.0;
    std::string note;
};

// Residual target for non-degenerate polynomial radii.
inline constexpr double kResidualTarget = 1e-12;
// Below this ratio the closed form switches to its rationalized expression.
inline constexpr double kSmallRatio = 1e-4;

double covering_radius(double t);

// (r - t r^k, r + t r^k), k = 2 by default.
std::pair<double, double> growth_envelope(double t, double r, int k = 2);

// |r + t r^k - (1 - t)|.
double defining_residual(double t, int k, double r);

RadiusResult closed_form_bohr_radius(double t);

/// Root of r + t r^k = 1 - t in (0, 1) by bisection. Terminates when the
/// bracket is no wider than tol and the residual is at most 1e-12.
RadiusResult generalized_bohr_radius(double t, int k, double tol = 1e-14);

// 2(g2 + alpha - 1) / (g2 + sqrt(g2^2 + 4 g2 (1 - alpha) - 4 (1 - alpha)^2)).
double rationalized_radius(double gamma2, double alpha);

// Radius for a general weighted-budget spec (closed form when k = 2).
RadiusResult bohr_radius(const ClassSpec& spec, double tol = 1e-14);

RadiusResult bohr_radius_for(const ClassInstance& instance, double tol = 1e-14);

// The printed convex-Janowski radical (-1 + sqrt(1 + 2u(1 - u))) / u with
// u = (D - C) / (1 + 2D - C). It does not solve the defining equation of
// the class; kept for comparison only.
double printed_sconv_radius(double C, double D);

}  // namespace bohrlab

#endif  // BOHRLAB_SOLVER_HPP
