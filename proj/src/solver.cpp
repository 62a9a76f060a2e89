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

#include "bohrlab/solver.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <variant>

namespace bohrlab {

namespace {

constexpr double kBracketTop = 1.0 - 1e-15;
constexpr int kMaxBisections = 200;

RadiusResult degenerate_result() {
    RadiusResult out;
    out.value = 0.0;
    out.method = RadiusMethod::degenerate;
    out.note = "degenerate: budget ratio >= 1, covering radius is 0";
    return out;
}

RadiusResult zero_ratio_limit() {
    RadiusResult out;
    out.value = 1.0;
    out.method = RadiusMethod::limit;
    out.note = "limit t -> 0+: class collapses to the identity";
    return out;
}

std::string shortest(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string to_string(RadiusMethod method) {
    switch (method) {
        case RadiusMethod::closed_form: return "closed_form";
        case RadiusMethod::bisection: return "bisection";
        case RadiusMethod::degenerate: return "degenerate";
        case RadiusMethod::limit: return "limit";
    }
    return "unknown";
}

double covering_radius(double t) {
    if (!(t >= 0.0)) throw std::domain_error("covering_radius: t must be >= 0");
    return std::max(1.0 - t, 0.0);
}

std::pair<double, double> growth_envelope(double t, double r, int k) {
    if (!(t >= 0.0)) throw std::domain_error("growth_envelope: t must be >= 0");
    if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("growth_envelope: r must lie in [0, 1]");
    if (k < 2) throw std::domain_error("growth_envelope: k must be >= 2");
    const double term = t * std::pow(r, k);
    return {r - term, r + term};
}

double defining_residual(double t, int k, double r) {
    return std::abs(r + t * std::pow(r, k) - (1.0 - t));
}

RadiusResult closed_form_bohr_radius(double t) {
    if (std::isnan(t) || t < 0.0) throw std::domain_error("closed_form_bohr_radius: t must be >= 0");
    if (t == 0.0) return zero_ratio_limit();
    if (t >= 1.0) return degenerate_result();

    RadiusResult out;
    out.method = RadiusMethod::closed_form;
    const double root = std::sqrt(1.0 + 4.0 * t * (1.0 - t));
    out.value = t < kSmallRatio ? 2.0 * (1.0 - t) / (1.0 + root) : (root - 1.0) / (2.0 * t);
    out.residual = defining_residual(t, 2, out.value);
    return out;
}

RadiusResult generalized_bohr_radius(double t, int k, double tol) {
    if (std::isnan(t) || t < 0.0) throw std::domain_error("generalized_bohr_radius: t must be >= 0");
    if (k < 2) throw std::domain_error("generalized_bohr_radius: k must be >= 2");
    if (!(tol > 0.0)) throw std::domain_error("generalized_bohr_radius: tol must be > 0");
    if (t == 0.0) return zero_ratio_limit();
    if (t >= 1.0) return degenerate_result();

    auto H = [&](double r) { return r + t * std::pow(r, k) - (1.0 - t); };
    double lo = 0.0;
    double hi = kBracketTop;
    for (int iter = 0; iter < kMaxBisections; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double h = H(mid);
        if (hi - lo <= tol && std::abs(h) <= kResidualTarget) {
            RadiusResult out;
            out.value = mid;
            out.method = RadiusMethod::bisection;
            out.residual = std::abs(h);
            return out;
        }
        if (h == 0.0) {
            lo = hi = mid;
        } else if (h < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw std::runtime_error("generalized_bohr_radius: bisection did not converge");
}

double rationalized_radius(double gamma2, double alpha) {
    if (!(std::isfinite(alpha) && alpha < 1.0)) {
        throw std::domain_error("rationalized_radius: requires alpha < 1");
    }
    const double s = 1.0 - alpha;
    if (!(std::isfinite(gamma2) && gamma2 >= s)) {
        throw std::domain_error("rationalized_radius: requires gamma2 >= 1 - alpha");
    }
    return 2.0 * (gamma2 - s) /
           (gamma2 + std::sqrt(gamma2 * gamma2 + 4.0 * gamma2 * s - 4.0 * s * s));
}

RadiusResult bohr_radius(const ClassSpec& spec, double tol) {
    if (spec.start_index() == 2) return closed_form_bohr_radius(spec.ratio());
    return generalized_bohr_radius(spec.ratio(), spec.start_index(), tol);
}

RadiusResult bohr_radius_for(const ClassInstance& instance, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("bohr_radius_for: tol must be > 0");
    const auto verdict = validate_params(instance);
    if (!verdict.valid) throw std::invalid_argument(class_name(instance) + ": " + verdict.message);
    if (verdict.degenerate) return degenerate_result();

    RadiusResult out = closed_form_bohr_radius(budget(instance) / alpha_min(instance));
    if (const auto* p = std::get_if<SConvTau>(&instance)) {
        out.note = "solved from the defining equation with t = (D-C)/(2(1+2D-C)); the printed "
                   "radical gives " + shortest(printed_sconv_radius(p->C, p->D));
    }
    return out;
}

double printed_sconv_radius(double C, double D) {
    const double u = (D - C) / (1.0 + 2.0 * D - C);
    return (-1.0 + std::sqrt(1.0 + 2.0 * u * (1.0 - u))) / u;
}

}  // namespace bohrlab
