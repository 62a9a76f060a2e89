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

#include <doctest.h>

#include <cmath>
#include <random>

#include "bohrlab/coeffs.hpp"

using namespace bohrlab;

namespace {

HarmonicPolynomialMap random_map(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> degree(2, 9);
    std::uniform_real_distribution<double> coeff(-0.4, 0.4);
    CoeffTable a;
    CoeffTable b;
    for (int i = 0; i < 4; ++i) a[degree(rng)] = {coeff(rng), coeff(rng)};
    for (int i = 0; i < 3; ++i) b[degree(rng)] = {coeff(rng), coeff(rng)};
    return HarmonicPolynomialMap(a, b);
}

}  // namespace

TEST_CASE("evaluate examples") {
    const Complex z{0.3, 0.4};
    CHECK(evaluate(HarmonicPolynomialMap::identity(), z) == z);

    const HarmonicPolynomialMap f({{2, {-0.5, 0.0}}}, {});
    CHECK(std::abs(evaluate(f, 1.0) - Complex{0.5, 0.0}) < 1e-15);

    const HarmonicPolynomialMap g({}, {{2, {0.3, 0.0}}});
    CHECK(std::abs(evaluate(g, Complex{0.0, 1.0}) - Complex{-0.3, 1.0}) < 1e-15);
}

TEST_CASE("evaluate rejects points outside the closed disk") {
    CHECK_THROWS_AS(evaluate({}, Complex{1.0, 0.1}), std::domain_error);
    CHECK_NOTHROW(evaluate({}, std::polar(1.0, 0.7)));
}

TEST_CASE("construction normalizes and validates the support") {
    const HarmonicPolynomialMap f({{2, {0.0, 0.0}}, {3, {0.1, 0.0}}}, {{4, {0.0, 0.0}}});
    CHECK(f.analytic().size() == 1);
    CHECK(f.coanalytic().empty());
    CHECK(f.max_degree() == 3);
    CHECK(f.min_degree() == 3);
    CHECK(HarmonicPolynomialMap{}.max_degree() == 1);
    CHECK_THROWS_AS(HarmonicPolynomialMap({{1, {0.1, 0.0}}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(HarmonicPolynomialMap({}, {{2, {NAN, 0.0}}}), std::invalid_argument);
}

TEST_CASE("majorant examples") {
    CHECK(majorant({}, 0.7) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(majorant(HarmonicPolynomialMap({{2, {-0.5, 0.0}}}, {}), 0.5) ==
          doctest::Approx(0.625).epsilon(1e-15));
    const HarmonicPolynomialMap f({{2, {0.2, 0.0}}}, {{3, {0.1, 0.0}}});
    CHECK(majorant(f, 1.0) == doctest::Approx(1.3).epsilon(1e-15));
    CHECK_THROWS_AS(majorant(f, 1.5), std::domain_error);
    CHECK_THROWS_AS(majorant(f, -0.1), std::domain_error);
}

TEST_CASE("boundary samples") {
    const auto ident = boundary_samples({}, 4);
    const Complex expected[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int j = 0; j < 4; ++j) CHECK(std::abs(ident[j] - expected[j]) < 1e-15);

    const HarmonicPolynomialMap f({{2, {-0.5, 0.0}}}, {});
    CHECK_THROWS_AS(boundary_samples(f, 2), std::domain_error);
    CHECK(std::abs(boundary_samples(f, 4)[0] - Complex{0.5, 0.0}) < 1e-15);
}

TEST_CASE("property: majorant starts at zero and is monotone") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const auto f = random_map(rng);
        CHECK(majorant(f, 0.0) == 0.0);
        double r1 = unit(rng);
        double r2 = unit(rng);
        if (r1 > r2) std::swap(r1, r2);
        CHECK(majorant(f, r1) <= majorant(f, r2));
    }
}

TEST_CASE("property: |f(z)| is bounded by the majorant at |z|") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const auto f = random_map(rng);
        const Complex z = std::polar(unit(rng), 2.0 * M_PI * unit(rng));
        CHECK(std::abs(evaluate(f, z)) <= majorant(f, std::abs(z)) + 1e-14);
    }
}

TEST_CASE("property: moving a coefficient to the anti-analytic part keeps the majorant") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        CoeffTable a;
        CoeffTable b;
        for (int m = 2; m < 7; ++m) {
            const double mod = unit(rng) * 0.2;
            a[m] = std::polar(mod, 6.0 * unit(rng));
            b[m] = std::polar(mod, 6.0 * unit(rng));
        }
        const double r = unit(rng);
        CHECK(majorant(HarmonicPolynomialMap(a, {}), r) ==
              doctest::Approx(majorant(HarmonicPolynomialMap({}, b), r)).epsilon(1e-14));
    }
}
