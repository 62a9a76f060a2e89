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

#include "bohrlab/wclass.hpp"

#include <cmath>
#include <stdexcept>

namespace bohrlab {

namespace {

constexpr int kMaxBisections = 200;
constexpr double kResidualFloor = 1e-10;

// (1 - rho) / (m (1 + mu (m - 1))); completely monotone in m for mu >= 0.
double half_bound(long m, const WParams& p) {
    const double md = static_cast<double>(m);
    return (1.0 - p.rho) / (md * (1.0 + p.mu * (md - 1.0)));
}

}  // namespace

void validate(const WParams& p) {
    if (!(std::isfinite(p.mu) && p.mu >= 0.0)) throw std::invalid_argument("W: requires mu >= 0");
    if (!(p.rho >= 0.0 && p.rho < 1.0)) throw std::invalid_argument("W: requires 0 <= rho < 1");
    if (!(p.tol > 0.0 && p.tol <= 1e-3)) throw std::invalid_argument("W: requires tol in (0, 1e-3]");
}

double w_coeff_bound(int m, const WParams& p) {
    validate(p);
    if (m < 2) throw std::domain_error("w_coeff_bound: requires m >= 2");
    return 2.0 * half_bound(m, p);
}

SeriesValue w_majorant_series(double r, const WParams& p) {
    validate(p);
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("w_majorant_series: requires 0 <= r < 1");
    return sum_geometric_majorized(
        [&](long m) { return 2.0 * half_bound(m, p) * std::pow(r, static_cast<double>(m)); }, 2, r,
        p.tol);
}

SeriesValue w_rhs(const WParams& p) {
    validate(p);
    // sum_{m>=2} (-1)^{m-1} e_m = -sum_{j>=0} (-1)^j e_{2+j}
    SeriesValue s = sum_alternating_monotone([&](long m) { return half_bound(m, p); }, 2, 0.5 * p.tol);
    return {1.0 + 2.0 * s.value, 2.0 * s.tail_bound, s.terms_used};
}

SeriesValue w_growth_lower(double r, const WParams& p) {
    validate(p);
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("w_growth_lower: requires 0 <= r < 1");
    if (r == 0.0) return {0.0, 0.0, 1};
    SeriesValue s = sum_alternating_monotone(
        [&](long m) { return half_bound(m, p) * std::pow(r, static_cast<double>(m)); }, 2,
        0.5 * p.tol);
    return {r + 2.0 * s.value, 2.0 * s.tail_bound, s.terms_used};
}

SeriesValue w_defining_function(double r, const WParams& p) {
    const SeriesValue lhs = w_majorant_series(r, p);
    const SeriesValue rhs = w_rhs(p);
    return {r + lhs.value - rhs.value, lhs.tail_bound + rhs.tail_bound,
            lhs.terms_used + rhs.terms_used};
}

RadiusResult w_bohr_radius(const WParams& p) {
    validate(p);
    RadiusResult out;
    if (1.0 - p.rho <= kRhoLimitGap) {
        out.value = 1.0 - 1e-9;
        out.method = RadiusMethod::limit;
        out.note = "limit rho -> 1-: radius capped at 1 - 1e-9";
        return out;
    }

    WParams series = p;
    series.tol = 0.25 * p.tol;
    const SeriesValue rhs = w_rhs(series);
    auto H = [&](double r) {
        const SeriesValue lhs = w_majorant_series(r, series);
        return SeriesValue{r + lhs.value - rhs.value, lhs.tail_bound + rhs.tail_bound,
                           lhs.terms_used};
    };

    // H is strictly increasing with H(0) < 0; step toward 1 until it turns positive.
    double lo = 0.0;
    double hi = 0.5;
    for (int j = 2; H(hi).value <= 0.0; ++j) {
        if (j > 52) throw std::logic_error("w_bohr_radius: failed to bracket the root");
        lo = hi;
        hi = 1.0 - std::ldexp(1.0, -j);
    }

    for (int iter = 0; iter < kMaxBisections; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const SeriesValue h = H(mid);
        if (hi - lo <= 0.5 * p.tol && std::abs(h.value) <= std::max(kResidualFloor, h.tail_bound)) {
            out.value = mid;
            out.method = RadiusMethod::bisection;
            out.residual = std::abs(h.value);
            out.tail_bound = h.tail_bound;
            return out;
        }
        (h.value < 0.0 ? lo : hi) = mid;
    }
    throw std::logic_error("w_bohr_radius: bisection did not converge");
}

HarmonicPolynomialMap w_extremal(const WParams& p, int max_degree) {
    validate(p);
    if (max_degree < 2) throw std::domain_error("w_extremal: requires max_degree >= 2");
    CoeffTable analytic;
    for (int m = 2; m <= max_degree; ++m) {
        const double sign = (m % 2 == 0) ? -1.0 : 1.0;
        analytic[m] = Complex{2.0 * sign * half_bound(m, p), 0.0};
    }
    return HarmonicPolynomialMap(std::move(analytic), {});
}

}  // namespace bohrlab
