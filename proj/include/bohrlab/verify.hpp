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

#ifndef BOHRLAB_VERIFY_HPP
#define BOHRLAB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohrlab/classes.hpp"
#include "bohrlab/coeffs.hpp"
#include "bohrlab/wclass.hpp"

namespace bohrlab {

/// One violated inequality lhs <= rhs. margin = rhs - lhs is negative.
struct Failure {
    std::string instance;
    std::string witness;
    std::uint64_t seed = 0;
    std::string quantity;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

/// Outcome of one or more checks. Each check call contributes at most one
/// failure (its worst margin). elapsed_seconds is not serialized.
struct VerificationReport {
    std::string suite;
    long cases_run = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notices;
    double elapsed_seconds = 0.0;

    bool passed() const noexcept { return failures.empty(); }
    void absorb(const VerificationReport& other);
};

// Absolute slack on growth and Bohr comparisons.
inline constexpr double kCheckSlack = 1e-10;
// Aggregation slack added to the sharpness tolerance.
inline constexpr double kSharpnessSlack = 1e-9;
// Degree at which the W extremal series is truncated for checks.
inline constexpr int kWExtremalDegree = 512;

struct WitnessTag {
    std::string label = "member";
    std::uint64_t seed = 0;
};

// Envelope max(r - t r^2, 0) <= |f(r e^{i theta})| <= r + t r^2 on r = i / n_r
// (i = 1..n_r), theta = 2 pi j / n_theta.
VerificationReport check_growth(const ClassInstance& instance, const HarmonicPolynomialMap& f,
                                int n_r, int n_theta, const WitnessTag& tag = {});
// Lower bound only, r = i / (n_r + 1); slack includes series and truncation tails.
VerificationReport check_growth(const WParams& params, const HarmonicPolynomialMap& f, int n_r,
                                int n_theta, const WitnessTag& tag = {});

// majorant(f, r) <= r + t r^2 and majorant(f, r) <= 1 - t for r = r* i / n_r.
VerificationReport check_bohr(const ClassInstance& instance, const HarmonicPolynomialMap& f,
                              int n_r, const WitnessTag& tag = {});
// majorant(f, r) <= w_rhs for r = r* i / n_r.
VerificationReport check_bohr(const WParams& params, const HarmonicPolynomialMap& f, int n_r,
                              const WitnessTag& tag = {});

/// Extremal witness at r*: majorant equals the boundary-distance oracle
/// within tol_total, and exceeds it beyond tol_total at r* + epsilon.
VerificationReport check_sharpness(const ClassInstance& instance, double epsilon = 0.01);
VerificationReport check_sharpness(const WParams& params, double epsilon = 0.01);

enum class Suite { all, growth, bohr, sharpness };

std::optional<Suite> parse_suite(const std::string& name);
std::string to_string(Suite suite);

struct ExtraWitness {
    std::size_t instance_index = 0;  // into SuiteConfig::grid
    std::string label;
    HarmonicPolynomialMap map;
};

struct SuiteConfig {
    Suite suite = Suite::all;
    std::uint64_t seed = 1;
    int cases = 100;
    int max_degree = 12;
    int n_r = 32;
    int n_theta = 64;
    double epsilon = 0.01;
    std::vector<ClassInstance> grid;
    std::vector<WParams> w_grid;
    std::vector<ExtraWitness> extra;
};

std::vector<ClassInstance> default_grid();
std::vector<WParams> default_w_grid();
// Suite settings with the default catalog and W grids.
SuiteConfig default_suite_config(Suite suite, std::uint64_t seed, int cases);

// Seed of random member `index` of grid entry `instance`.
std::uint64_t member_seed(std::uint64_t base, std::size_t instance, std::size_t index);

VerificationReport run_suite(const SuiteConfig& config);

std::string format_report_text(const VerificationReport& report);

}  // namespace bohrlab

#endif  // BOHRLAB_VERIFY_HPP
