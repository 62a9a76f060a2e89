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

#include "bohrlab/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bohrlab {

double bisect_root(const std::function<double(double)>& g, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("bisect_root: requires lo < hi");
    if (!(tol > 0.0)) throw std::invalid_argument("bisect_root: requires tol > 0");
    double glo = g(lo);
    const double ghi = g(hi);
    if (!std::isfinite(glo) || !std::isfinite(ghi)) {
        throw std::domain_error("bisect_root: non-finite value at a bracket end");
    }
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo < 0.0) == (ghi < 0.0)) {
        throw std::invalid_argument("bisect_root: no sign change on the bracket");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double gm = g(mid);
        if (!std::isfinite(gm)) throw std::domain_error("bisect_root: non-finite evaluation");
        if (gm == 0.0) return mid;
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> refine_min(const std::function<double(double)>& g, Bracket bracket,
                                     double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("refine_min: requires tol > 0");
    if (!(bracket.lo < bracket.mid && bracket.mid < bracket.hi)) {
        throw std::invalid_argument("refine_min: requires lo < mid < hi");
    }
    const double gmid = g(bracket.mid);
    if (!(gmid <= g(bracket.lo) && gmid <= g(bracket.hi))) {
        throw std::invalid_argument("refine_min: middle point is not the smallest");
    }

    constexpr double inv_phi = 0.6180339887498948482;
    double a = bracket.lo;
    double b = bracket.hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double g1 = g(x1);
    double g2 = g(x2);
    double best_x = bracket.mid;
    double best_g = gmid;
    while (b - a > tol) {
        if (g1 <= g2) {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - inv_phi * (b - a);
            g1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + inv_phi * (b - a);
            g2 = g(x2);
        }
        if (x1 >= x2) break;
    }
    const double xm = 0.5 * (a + b);
    const double gm = g(xm);
    // Keep the smallest value seen; a flat bracket resolves to its midpoint.
    for (auto [x, v] : {std::pair{xm, gm}, std::pair{x1, g1}, std::pair{x2, g2}}) {
        if (v < best_g) {
            best_g = v;
            best_x = x;
        }
    }
    if (best_g == gm) best_x = xm;
    return {best_x, best_g};
}

DistanceEstimate boundary_distance(const HarmonicPolynomialMap& f, int n_samples,
                                   double refine_tol) {
    if (n_samples < 64) throw std::invalid_argument("boundary_distance: need >= 64 samples");
    if (!(refine_tol > 0.0)) throw std::invalid_argument("boundary_distance: refine_tol must be > 0");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double step = two_pi / n_samples;
    auto modulus = [&](double theta) { return std::abs(evaluate(f, std::polar(1.0, theta))); };

    std::vector<double> samples(static_cast<std::size_t>(n_samples));
    for (int j = 0; j < n_samples; ++j) samples[j] = modulus(j * step);

    DistanceEstimate best;
    best.value = samples[0];
    best.argmin_angle = 0.0;
    for (int j = 0; j < n_samples; ++j) {
        const double prev = samples[(j + n_samples - 1) % n_samples];
        const double next = samples[(j + 1) % n_samples];
        if (!(samples[j] <= prev && samples[j] <= next)) continue;
        const double centre = j * step;
        if (samples[j] < best.value) {
            best.value = samples[j];
            best.argmin_angle = centre;
        }
        // Re-evaluated neighbours can differ from the stored samples by rounding.
        if (!(samples[j] <= modulus(centre - step) && samples[j] <= modulus(centre + step))) continue;
        const auto [theta, value] =
            refine_min(modulus, {centre - step, centre, centre + step}, refine_tol);
        if (value < best.value) {
            best.value = value;
            best.argmin_angle = theta;
        }
    }
    best.argmin_angle = std::fmod(best.argmin_angle, two_pi);
    if (best.argmin_angle < 0.0) best.argmin_angle += two_pi;
    best.refinement_width = refine_tol;
    return best;
}

}  // namespace bohrlab
