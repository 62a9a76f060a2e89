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

#ifndef BOHRLAB_ORACLE_HPP
#define BOHRLAB_ORACLE_HPP

#include <functional>
#include <utility>

#include "bohrlab/coeffs.hpp"

namespace bohrlab {

/// Minimum boundary modulus min_theta |f(e^{i theta})|.
///
/// For univalent f with f(0) = 0 this is the distance from f(0) to the
/// boundary of f(D); for other maps it is an upper bound on that distance.
struct DistanceEstimate {
    double value = 0.0;
    double argmin_angle = 0.0;      // in [0, 2 pi)
    double refinement_width = 0.0;  // final golden-section bracket width
};

inline constexpr int kDefaultBoundarySamples = 4096;
inline constexpr double kDefaultRefineTol = 1e-10;

DistanceEstimate boundary_distance(const HarmonicPolynomialMap& f,
                                   int n_samples = kDefaultBoundarySamples,
                                   double refine_tol = kDefaultRefineTol);

// Midpoint bisection on a sign-changing bracket; returns the final midpoint.
double bisect_root(const std::function<double(double)>& g, double lo, double hi, double tol);

struct Bracket {
    double lo;
    double mid;
    double hi;
};

// Golden-section search; needs lo < mid < hi and g(mid) <= g(lo), g(hi).
// Returns (argmin, min value).
std::pair<double, double> refine_min(const std::function<double(double)>& g, Bracket bracket,
                                     double tol);

}  // namespace bohrlab

#endif  // BOHRLAB_ORACLE_HPP
