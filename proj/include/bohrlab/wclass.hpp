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

#ifndef BOHRLAB_WCLASS_HPP
#define BOHRLAB_WCLASS_HPP

#include "bohrlab/coeffs.hpp"
#include "bohrlab/series.hpp"
#include "bohrlab/solver.hpp"

namespace bohrlab {

/// Parameters of the close-to-convex harmonic family
/// Re(h' + mu z h'' - rho) > |g' + mu z g''|, mu >= 0, 0 <= rho < 1.
struct WParams {
    double mu = 0.0;
    double rho = 0.0;
    double tol = 1e-10;  // series and root tolerance, in (0, 1e-3]
};

void validate(const WParams& p);

// Distance from 1 below which rho is treated as the limit rho -> 1-.
inline constexpr double kRhoLimitGap = 1e-9;

/// Sharp coefficient bound 2(1 - rho) / (m (1 + mu (m - 1))) on |a_m| + |b_m|.
double w_coeff_bound(int m, const WParams& p);

/// sum_{m>=2} w_coeff_bound(m) r^m, 0 <= r < 1.
SeriesValue w_majorant_series(double r, const WParams& p);

/// 1 - 2 sum_{m>=2} (-1)^{m-1} (1 - rho) / (m (1 + mu (m - 1))).
/// The alternating sum is negative, so the value exceeds 1.
SeriesValue w_rhs(const WParams& p);

// r - 2 sum_{m>=2} (-1)^{m-1} (1 - rho) r^m / (m (1 + mu (m - 1))), 0 <= r < 1.
SeriesValue w_growth_lower(double r, const WParams& p);

// H(r) = r + w_majorant_series(r) - w_rhs; tail_bound sums both truncations.
SeriesValue w_defining_function(double r, const WParams& p);

/// Root of r + w_majorant_series(r) = w_rhs in (0, 1).
///
/// Series are truncated at tol / 4 each and the bracket is refined to
/// tol / 2; the returned residual is at most max(1e-10, tail bounds). For
/// rho within kRhoLimitGap of 1 the capped value 1 - 1e-9 is returned with
/// method == limit.
RadiusResult w_bohr_radius(const WParams& p);

// z + sum_{m=2}^{max_degree} 2 (-1)^{m-1} (1 - rho) / (m (1 + mu (m - 1))) z^m.
HarmonicPolynomialMap w_extremal(const WParams& p, int max_degree);

}  // namespace bohrlab

#endif  // BOHRLAB_WCLASS_HPP
