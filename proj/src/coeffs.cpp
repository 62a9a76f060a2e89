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

#include "bohrlab/coeffs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bohrlab {

namespace {

// Points on the unit circle produced by std::polar can land a few ulps outside.
constexpr double kDiskSlack = 8 * std::numeric_limits<double>::epsilon();

CoeffTable normalized(CoeffTable table, const char* part) {
    for (auto it = table.begin(); it != table.end();) {
        const auto& [degree, value] = *it;
        if (degree < 2) {
            throw std::invalid_argument(std::string(part) + " coefficient at degree " +
                                        std::to_string(degree) + " (degrees must be >= 2)");
        }
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            throw std::invalid_argument(std::string(part) + " coefficient at degree " +
                                        std::to_string(degree) + " is not finite");
        }
        if (value == Complex{}) {
            it = table.erase(it);
        } else {
            ++it;
        }
    }
    return table;
}

// Ascending-degree accumulation of sum c_m z^m over a sparse table.
Complex sparse_sum(const CoeffTable& table, Complex z) {
    Complex acc{};
    Complex power{1.0, 0.0};
    int power_degree = 0;
    for (const auto& [degree, value] : table) {
        while (power_degree < degree) {
            power *= z;
            ++power_degree;
        }
        acc += value * power;
    }
    return acc;
}

}  // namespace

HarmonicPolynomialMap::HarmonicPolynomialMap(CoeffTable analytic, CoeffTable coanalytic)
    : analytic_(normalized(std::move(analytic), "analytic")),
      coanalytic_(normalized(std::move(coanalytic), "co-analytic")) {}

int HarmonicPolynomialMap::max_degree() const noexcept {
    int degree = 1;
    if (!analytic_.empty()) degree = std::max(degree, analytic_.rbegin()->first);
    if (!coanalytic_.empty()) degree = std::max(degree, coanalytic_.rbegin()->first);
    return degree;
}

int HarmonicPolynomialMap::min_degree() const noexcept {
    if (is_identity()) return 0;
    int degree = std::numeric_limits<int>::max();
    if (!analytic_.empty()) degree = std::min(degree, analytic_.begin()->first);
    if (!coanalytic_.empty()) degree = std::min(degree, coanalytic_.begin()->first);
    return degree;
}

Complex evaluate(const HarmonicPolynomialMap& f, Complex z) {
    if (!(std::abs(z) <= 1.0 + kDiskSlack)) {
        throw std::domain_error("evaluate: |z| > 1 is outside the closed unit disk");
    }
    return z + sparse_sum(f.analytic(), z) + std::conj(sparse_sum(f.coanalytic(), z));
}

double majorant(const HarmonicPolynomialMap& f, double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::domain_error("majorant: r must lie in [0, 1]");
    }
    double acc = r;
    for (const auto* table : {&f.analytic(), &f.coanalytic()}) {
        for (const auto& [degree, value] : *table) {
            acc += std::abs(value) * std::pow(r, degree);
        }
    }
    return acc;
}

std::vector<Complex> boundary_samples(const HarmonicPolynomialMap& f, int n) {
    if (n < 4) {
        throw std::domain_error("boundary_samples: need at least 4 samples");
    }
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / n;
        out.push_back(evaluate(f, std::polar(1.0, theta)));
    }
    return out;
}

double coefficient_mass(const HarmonicPolynomialMap& f) {
    double acc = 0.0;
    for (const auto& [degree, value] : f.analytic()) acc += std::abs(value);
    for (const auto& [degree, value] : f.coanalytic()) acc += std::abs(value);
    return acc;
}

}  // namespace bohrlab
