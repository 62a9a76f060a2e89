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

#include "bohrlab/oracle.hpp"
#include "bohrlab/solver.hpp"

using namespace bohrlab;

TEST_CASE("boundary distance examples") {
    const auto ident = boundary_distance({});
    CHECK(ident.value == doctest::Approx(1.0).epsilon(1e-15));

    const auto half = boundary_distance(HarmonicPolynomialMap({{2, {-0.5, 0}}}, {}));
    CHECK(half.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::min(half.argmin_angle, 2 * M_PI - half.argmin_angle) < 1e-4);
    CHECK(half.refinement_width <= 1e-10);

    const auto anti = boundary_distance(HarmonicPolynomialMap({}, {{2, {0.3, 0}}}));
    CHECK(anti.value == doctest::Approx(0.7).epsilon(1e-12));

    CHECK_THROWS(boundary_distance({}, 32));
    CHECK_THROWS(boundary_distance({}, 4096, 0.0));
}

TEST_CASE("property: extremal boundary distance is the covering radius") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    for (int trial = 0; trial < 60; ++trial) {
        const double t = unit(rng);
        const double sign = trial % 2 ? 1.0 : -1.0;
        const auto a = boundary_distance(HarmonicPolynomialMap({{2, {sign * t, 0}}}, {}));
        CHECK(std::abs(a.value - covering_radius(t)) <= 1e-10 + 1e-10);
        const auto b = boundary_distance(HarmonicPolynomialMap({}, {{2, {sign * t, 0}}}));
        CHECK(std::abs(b.value - covering_radius(t)) <= 1e-10 + 1e-10);
    }
}

TEST_CASE("property: doubling the sample count never raises the estimate") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coeff(-0.15, 0.15);
    for (int trial = 0; trial < 20; ++trial) {
        CoeffTable a;
        CoeffTable b;
        for (int m = 2; m <= 9; ++m) {
            a[m] = {coeff(rng), coeff(rng)};
            b[m] = {coeff(rng), coeff(rng)};
        }
        const HarmonicPolynomialMap f(a, b);
        const double coarse = boundary_distance(f, 256).value;
        const double fine = boundary_distance(f, 512).value;
        CHECK(fine <= coarse + 1e-10);
    }
}

TEST_CASE("bisect_root") {
    CHECK(bisect_root([](double r) { return r - 0.5; }, 0, 1, 1e-14) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bisect_root([](double r) { return r * r + 2 * r - 1; }, 0, 1, 1e-14) ==
          doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-13));
    CHECK_THROWS_AS(bisect_root([](double r) { return r - 2; }, 0, 1, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(bisect_root([](double r) { return r < 0.5 ? -1.0 : NAN; }, 0, 1, 1e-12),
                    std::domain_error);
}

TEST_CASE("property: bisect_root on the defining equation reproduces the closed form") {
    for (int i = 1; i < 100; ++i) {
        const double t = i / 100.0;
        const double tol = 1e-13;
        const double root =
            bisect_root([t](double r) { return r + t * r * r - (1 - t); }, 0, 1, tol);
        CHECK(std::abs(root - closed_form_bohr_radius(t).value) <= tol);
    }
}

TEST_CASE("refine_min") {
    const auto [x, g] = refine_min([](double v) { return (v - 0.3) * (v - 0.3); }, {0.0, 0.25, 1.0}, 1e-10);
    CHECK(x == doctest::Approx(0.3).epsilon(1e-8));
    CHECK(g <= 1e-18);

    const auto [theta, value] =
        refine_min([](double th) { return std::abs(1.0 - 0.5 * std::polar(1.0, th)); }, {-0.1, 0.01, 0.1}, 1e-10);
    CHECK(value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(theta) < 1e-4);

    const auto [mid, flat] = refine_min([](double) { return 2.0; }, {0.0, 0.5, 1.0}, 1e-6);
    CHECK(flat == 2.0);
    CHECK(mid >= 0.0);
    CHECK(mid <= 1.0);

    CHECK_THROWS(refine_min([](double v) { return v; }, {0.0, 0.5, 1.0}, 1e-6));
    CHECK_THROWS(refine_min([](double v) { return v * v; }, {1.0, 0.0, -1.0}, 1e-6));
}
