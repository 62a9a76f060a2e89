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

#ifndef BOHRLAB_SERIES_HPP
#define BOHRLAB_SERIES_HPP

#include <functional>

namespace bohrlab {

/// Truncated series value with a rigorous bound on the discarded tail.
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    long terms_used = 0;
};

// Largest number of terms a certified sum may use before giving up.
inline constexpr long kMaxSeriesTerms = 1'000'000;

/// sum_{m >= from} term(m) for nonnegative terms of the form c_m r^m with
/// c_m nonincreasing and 0 <= r < 1. After term N the tail is bounded by
/// term(N) r / (1 - r); summation stops at the first N where that bound is
/// at most tol / 2. Throws std::runtime_error past kMaxSeriesTerms.
SeriesValue sum_geometric_majorized(const std::function<double(long)>& term, long from, double r,
                                    double tol);

/// sum_{j >= 0} (-1)^j x(from + j) for a completely monotone sequence x
/// (every (-Delta)^p x is nonnegative and nonincreasing).
///
/// The tail past N terms is estimated by the first P terms of its Euler
/// transform; the remainder of the transform lies in [0, D_P / 2^P], so the
/// midpoint estimate carries the bound D_P / 2^{P+1} plus a rounding term.
/// N doubles until the bound is at most tol / 2.
SeriesValue sum_alternating_monotone(const std::function<double(long)>& x, long from, double tol);

}  // namespace bohrlab

#endif  // BOHRLAB_SERIES_HPP
