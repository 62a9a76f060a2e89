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

#include "bohrlab/series.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bohrlab {

namespace {

// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

constexpr int kEulerOrder = 12;

}  // namespace

SeriesValue sum_geometric_majorized(const std::function<double(long)>& term, long from, double r,
                                    double tol) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("geometric tail bound needs 0 <= r < 1");
    if (!(tol > 0.0)) throw std::domain_error("series tolerance must be > 0");

    SeriesValue out;
    if (r == 0.0) {
        out.terms_used = 1;
        return out;
    }
    CompensatedSum acc;
    const double ratio = r / (1.0 - r);
    for (long m = from;; ++m) {
        const double t = term(m);
        acc.add(t);
        ++out.terms_used;
        const double bound = t * ratio;
        if (bound <= 0.5 * tol) {
            out.value = acc.value();
            out.tail_bound = bound;
            return out;
        }
        if (out.terms_used >= kMaxSeriesTerms) {
            throw std::runtime_error("series truncation exceeded the term cap");
        }
    }
}

SeriesValue sum_alternating_monotone(const std::function<double(long)>& x, long from, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("series tolerance must be > 0");

    CompensatedSum partial;
    long summed = 0;
    for (long target = 8;; target *= 2) {
        if (target > kMaxSeriesTerms) {
            throw std::runtime_error("series truncation exceeded the term cap");
        }
        // Paired terms x_j - x_{j+1}; summed and target are both even.
        for (; summed < target; summed += 2) {
            partial.add(x(from + summed) - x(from + summed + 1));
        }

        std::array<double, kEulerOrder + 1> diff{};
        for (int i = 0; i <= kEulerOrder; ++i) diff[i] = x(from + summed + i);
        const double head = diff[0];

        // diff[0..p] after pass p holds (-Delta)^p x at successive indices.
        double estimate = 0.0;
        double scale = 0.5;
        for (int p = 0; p < kEulerOrder; ++p) {
            estimate += diff[0] * scale;
            for (int i = 0; i < kEulerOrder - p; ++i) diff[i] = diff[i] - diff[i + 1];
            scale *= 0.5;
        }
        const double last = std::abs(diff[0]) * scale;
        estimate += last;
        const double rounding = 2.0 * kEulerOrder * kEulerOrder *
                                std::numeric_limits<double>::epsilon() * std::abs(head);
        const double bound = last + rounding;
        if (bound <= 0.5 * tol) {
            // Tail starts at an even offset, so its sign is +.
            SeriesValue out;
            out.value = partial.value() + estimate;
            out.tail_bound = bound;
            out.terms_used = summed + kEulerOrder + 1;
            return out;
        }
    }
}

}  // namespace bohrlab
