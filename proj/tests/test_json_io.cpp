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

#include <random>

#include "bohrlab/json_io.hpp"

using namespace bohrlab;

TEST_CASE("map JSON layout") {
    const HarmonicPolynomialMap f({{2, {-0.5, 0.25}}}, {{3, {0.1, 0}}});
    const auto j = map_to_json(f);
    CHECK(j["a"]["2"][0] == -0.5);
    CHECK(j["a"]["2"][1] == 0.25);
    CHECK(j["b"]["3"][0] == 0.1);
    CHECK(map_from_json(j) == f);
    CHECK_THROWS(map_from_json(nlohmann::json::parse(R"({"a": {"1": [0.1, 0]}})")));
}

TEST_CASE("property: maps round-trip through JSON text") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_int_distribution<int> degree(2, 40);
    for (int trial = 0; trial < 200; ++trial) {
        CoeffTable a;
        CoeffTable b;
        for (int i = 0; i < 5; ++i) a[degree(rng)] = {coeff(rng), coeff(rng)};
        for (int i = 0; i < 5; ++i) b[degree(rng)] = {coeff(rng), coeff(rng)};
        const HarmonicPolynomialMap f(a, b);
        CHECK(map_from_json(nlohmann::json::parse(map_to_json(f).dump())) == f);
    }
}

TEST_CASE("property: catalog instances round-trip") {
    for (const auto& instance : default_grid()) {
        const auto back = instance_from_json(nlohmann::json::parse(instance_to_json(instance).dump()));
        CHECK(describe(back) == describe(instance));
    }
    CHECK_THROWS(instance_from_json(nlohmann::json::parse(R"({"class": "nosuch", "params": {}})")));
}

TEST_CASE("result JSON keys") {
    RadiusResult r;
    r.value = 0.5;
    r.method = RadiusMethod::bisection;
    r.residual = 1e-13;
    r.note = "n";
    const auto j = result_to_json(r);
    CHECK(j["value"] == 0.5);
    CHECK(j["method"] == "bisection");
    CHECK(j["residual"] == 1e-13);
    CHECK(j["tail_bound"] == 0.0);
    CHECK(j["note"] == "n");
}

TEST_CASE("report JSON keys") {
    VerificationReport report;
    report.suite = "bohr";
    report.cases_run = 3;
    report.failures.push_back({"rh0(beta=2)", "inflated", 9, "bohr_covering", 0.6, 0.5, -0.1});
    report.elapsed_seconds = 12.0;
    const auto j = report_to_json(report);
    CHECK(j["suite"] == "bohr");
    CHECK(j["cases_run"] == 3);
    CHECK(j["passed"] == false);
    CHECK(j["failures"].size() == 1);
    CHECK(j["failures"][0]["seed"] == 9);
    CHECK_FALSE(j.contains("elapsed_seconds"));
}
