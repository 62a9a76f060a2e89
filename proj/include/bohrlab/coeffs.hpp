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

#ifndef BOHRLAB_COEFFS_HPP
#define BOHRLAB_COEFFS_HPP

#include <complex>
#include <map>
#include <vector>

namespace bohrlab {

using Complex = std::complex<double>;

// Sparse coefficient table keyed by degree (all degrees >= 2).
using CoeffTable = std::map<int, Complex>;

/// Harmonic polynomial f = h + conj(g) with h(z) = z + sum a_m z^m and
/// g(z) = sum b_m z^m. The linear analytic coefficient is implicitly 1.
///
/// Zero entries are dropped on construction, so stored coefficients are
/// always nonzero. Degrees below 2 and non-finite values are rejected.
class HarmonicPolynomialMap {
public:
    HarmonicPolynomialMap() = default;
    HarmonicPolynomialMap(CoeffTable analytic, CoeffTable coanalytic);

    static HarmonicPolynomialMap identity() { return {}; }

    const CoeffTable& analytic() const noexcept { return analytic_; }
    const CoeffTable& coanalytic() const noexcept { return coanalytic_; }

    bool is_identity() const noexcept { return analytic_.empty() && coanalytic_.empty(); }
    // 1 for the identity map.
    int max_degree() const noexcept;
    // Smallest stored degree; 0 for the identity map.
    int min_degree() const noexcept;

    friend bool operator==(const HarmonicPolynomialMap&, const HarmonicPolynomialMap&) = default;

private:
    CoeffTable analytic_;
    CoeffTable coanalytic_;
};

// Value of f at z, |z| <= 1. Throws std::domain_error outside the closed disk.
Complex evaluate(const HarmonicPolynomialMap& f, Complex z);

/// Bohr majorant r + sum (|a_m| + |b_m|) r^m for r in [0, 1].
double majorant(const HarmonicPolynomialMap& f, double r);

// f(e^{2 pi i j / n}) for j = 0..n-1; requires n >= 4.
std::vector<Complex> boundary_samples(const HarmonicPolynomialMap& f, int n);

// Sum over the finite support of |a_m| + |b_m|.
double coefficient_mass(const HarmonicPolynomialMap& f);

}  // namespace bohrlab

#endif  // BOHRLAB_COEFFS_HPP
