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

#ifndef BOHRLAB_CLASSES_HPP
#define BOHRLAB_CLASSES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bohrlab/coeffs.hpp"

namespace bohrlab {

/// Coefficient weights (gamma_m on a_m, delta_m on b_m).
struct Weights {
    double gamma = 0.0;
    double delta = 0.0;
    friend bool operator==(const Weights&, const Weights&) = default;
};

using WeightFn = std::function<Weights(int)>;

// Horizon for the finite scan that validates weight sequences.
inline constexpr int kWeightScanHorizon = 10000;

/// Weighted-budget class: maps with sum_{m>=k} (gamma_m |a_m| + delta_m |b_m|) <= M.
///
/// Construction scans m in [k, horizon] and requires every nonzero weight to
/// be at least alpha_k = min{gamma_k, delta_k} (zero weights excluded), and
/// gamma_m > 0 throughout. delta_m may vanish identically, which marks an
/// analytic-only class; a delta sequence that is zero only somewhere is
/// rejected. Weights beyond the horizon are trusted, not checked.
class ClassSpec {
public:
    static ClassSpec make(int start_index, double budget, WeightFn weights,
                          int horizon = kWeightScanHorizon);

    int start_index() const noexcept { return start_index_; }
    double budget() const noexcept { return budget_; }
    double alpha() const noexcept { return alpha_; }
    // budget / alpha, the coefficient-sum bound.
    double ratio() const noexcept { return budget_ / alpha_; }
    bool analytic_only() const noexcept { return analytic_only_; }
    bool degenerate() const noexcept { return ratio() >= 1.0; }
    Weights weights(int m) const;

private:
    ClassSpec() = default;

    int start_index_ = 2;
    double budget_ = 0.0;
    double alpha_ = 0.0;
    bool analytic_only_ = false;
    WeightFn weights_;
};

// Catalog entries. Field names mirror the JSON/CLI parameter names.
struct SStarStarTau { double C; double D; };
struct SStarTau { double C; double D; };
struct SConvTau { double C; double D; };
struct FH0 { double lambda; };
struct KSTq { double k; double q; double alpha; };
struct RH0 { double beta; };
// g(m) defaults to the constant sequence g2 when unset.
struct TGeneral { double alpha; double g2; std::function<double(int)> g; };
struct TStarlike { double alpha; };
struct TConvex { double alpha; };
struct TM { double mu; double alpha; };
struct TN { double mu; double alpha; };

using ClassInstance = std::variant<SStarStarTau, SStarTau, SConvTau, FH0, KSTq, RH0, TGeneral,
                                   TStarlike, TConvex, TM, TN>;

using ParamMap = std::map<std::string, double>;

// Class names in catalog order: sstarstar_tau, sstar_tau, ..., tn.
const std::vector<std::string>& catalog_names();
std::string class_name(const ClassInstance& instance);
// Raw parameters in declaration order.
std::vector<std::pair<std::string, double>> class_params(const ClassInstance& instance);
// Builds an instance from a name and exactly the expected parameter keys.
// Throws std::invalid_argument for unknown classes, missing or extra keys.
// Parameter domains are not checked here; see validate_params.
ClassInstance make_instance(const std::string& name, const ParamMap& params);
// "name(key=value,...)" with shortest round-trip formatting.
std::string describe(const ClassInstance& instance);

struct ParamValidation {
    bool valid = false;
    bool degenerate = false;  // budget >= alpha_2, covering disk empty
    std::string message;
};

ParamValidation validate_params(const ClassInstance& instance);

/// Symmetric q-bracket (q^m - q^{-m}) / (q - q^{-1}) for 0 < q < 1, m >= 1.
double q_bracket(int m, double q);

Weights weights(const ClassInstance& instance, int m);
double budget(const ClassInstance& instance);
// min{gamma_2, delta_2} over the nonzero weights.
double alpha_min(const ClassInstance& instance);
ClassSpec to_spec(const ClassInstance& instance);

struct MembershipVerdict {
    bool member = false;
    double weighted_sum = 0.0;
    double margin = 0.0;  // budget - weighted_sum
};

// Absolute slack applied to the inclusive budget comparison.
inline constexpr double kMembershipSlack = 1e-12;

MembershipVerdict membership_check(const ClassSpec& spec, const HarmonicPolynomialMap& f);

enum class Part { analytic, anti_analytic };
enum class Sign { plus, minus };

// z +/- (M / alpha_k) z^k, or the same coefficient on conj(z^k).
HarmonicPolynomialMap extremal(const ClassSpec& spec, Part part = Part::analytic,
                               Sign sign = Sign::minus);

/// Random member with support in [k, max_degree], deterministic in seed.
/// The raw coefficients are rescaled so the weighted sum equals fill * M,
/// with fill drawn uniformly from [0, 1] unless given.
HarmonicPolynomialMap random_member(const ClassSpec& spec, int max_degree, std::uint64_t seed,
                                    std::optional<double> fill = std::nullopt);

}  // namespace bohrlab

#endif  // BOHRLAB_CLASSES_HPP
