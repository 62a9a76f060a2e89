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

#include "bohrlab/classes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bohrlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string shortest(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

bool finite_all(std::initializer_list<double> xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

std::function<double(int)> general_sequence(const TGeneral& p) {
    if (p.g) return p.g;
    return [g2 = p.g2](int) { return g2; };
}

// Parameter-domain check without the degenerate test; empty string when valid.
std::string domain_error_message(const ClassInstance& instance) {
    auto janowski = [](double C, double D) -> std::string {
        if (!finite_all({C, D})) return "C and D must be finite";
        if (!(-D <= C && C < D && D <= 1.0)) return "requires -D <= C < D <= 1";
        return {};
    };
    return std::visit(
        overloaded{
            [&](const SStarStarTau& p) { return janowski(p.C, p.D); },
            [&](const SStarTau& p) { return janowski(p.C, p.D); },
            [&](const SConvTau& p) { return janowski(p.C, p.D); },
            [](const FH0& p) -> std::string {
                if (!(p.lambda > 0.0 && p.lambda <= 1.0)) return "requires lambda in (0, 1]";
                return {};
            },
            [](const KSTq& p) -> std::string {
                if (!(std::isfinite(p.k) && p.k >= 0.0)) return "requires 0 <= k < inf";
                if (!(p.q > 0.0 && p.q < 1.0)) return "requires 0 < q < 1";
                if (!(p.alpha >= 0.0 && p.alpha < 1.0)) return "requires 0 <= alpha < 1";
                return {};
            },
            [](const RH0& p) -> std::string {
                if (!(std::isfinite(p.beta) && p.beta > 1.0)) return "requires beta > 1";
                return {};
            },
            [](const TGeneral& p) -> std::string {
                if (!(std::isfinite(p.alpha) && p.alpha < 1.0)) return "requires alpha < 1";
                const double g2 = general_sequence(p)(2);
                if (!(std::isfinite(g2) && g2 > 0.0)) return "requires g2 > 0";
                return {};
            },
            [](const TStarlike& p) -> std::string {
                if (!(p.alpha >= 0.0 && p.alpha < 1.0)) return "requires 0 <= alpha < 1";
                return {};
            },
            [](const TConvex& p) -> std::string {
                if (!(p.alpha >= 0.0 && p.alpha < 1.0)) return "requires 0 <= alpha < 1";
                return {};
            },
            [](const TM& p) -> std::string {
                if (!(p.mu >= 0.0 && p.mu <= 1.0)) return "requires 0 <= mu <= 1";
                if (!(std::isfinite(p.alpha) && p.alpha > 1.0)) return "requires alpha > 1";
                return {};
            },
            [](const TN& p) -> std::string {
                if (!(p.mu >= 0.0 && p.mu <= 1.0)) return "requires 0 <= mu <= 1";
                if (!(std::isfinite(p.alpha) && p.alpha > 1.0)) return "requires alpha > 1";
                return {};
            },
        },
        instance);
}

void require_domain(const ClassInstance& instance) {
    if (auto msg = domain_error_message(instance); !msg.empty()) {
        throw std::invalid_argument(class_name(instance) + ": " + msg);
    }
}

// Unchecked weight formulas. Every family below is nondecreasing in m on its
// parameter domain, so the m = 2 weight is the minimum.
Weights raw_weights(const ClassInstance& instance, int m) {
    const double md = m;
    const double odd = (m % 2 != 0) ? 1.0 : 0.0;
    return std::visit(
        overloaded{
            [&](const SStarStarTau& p) {
                return Weights{std::abs(md * (1 + p.D) - (1 + p.C) * odd),
                               std::abs(md * (1 + p.D) + (1 + p.C) * odd)};
            },
            [&](const SStarTau& p) {
                return Weights{md * (1 + p.D) - (1 + p.C), md * (1 + p.D) + (1 + p.C)};
            },
            [&](const SConvTau& p) {
                return Weights{md * (md * (1 + p.D) - (1 + p.C)),
                               md * (md * (1 + p.D) + (1 + p.C))};
            },
            [&](const FH0&) { return Weights{md, md}; },
            [&](const KSTq& p) {
                return Weights{q_bracket(m, p.q) * (p.k + 1) - (p.k + p.alpha), 0.0};
            },
            [&](const RH0&) { return Weights{md, md}; },
            [&](const TGeneral& p) { return Weights{general_sequence(p)(m), 0.0}; },
            [&](const TStarlike& p) { return Weights{md - p.alpha, 0.0}; },
            [&](const TConvex& p) { return Weights{md * (md - p.alpha), 0.0}; },
            [&](const TM& p) {
                return Weights{(md - p.mu) + std::abs(md + p.mu - 2 * p.alpha), 0.0};
            },
            [&](const TN& p) {
                return Weights{md * (md - p.mu + 1 + std::abs(md + p.mu - 2 * p.alpha)), 0.0};
            },
        },
        instance);
}

double raw_budget(const ClassInstance& instance) {
    return std::visit(overloaded{
                          [](const SStarStarTau& p) { return p.D - p.C; },
                          [](const SStarTau& p) { return p.D - p.C; },
                          [](const SConvTau& p) { return p.D - p.C; },
                          [](const FH0& p) { return p.lambda; },
                          [](const KSTq& p) { return 1 - p.alpha; },
                          [](const RH0& p) { return p.beta - 1; },
                          [](const TGeneral& p) { return 1 - p.alpha; },
                          [](const TStarlike& p) { return 1 - p.alpha; },
                          [](const TConvex& p) { return 1 - p.alpha; },
                          [](const TM& p) { return 2 * (p.alpha - 1); },
                          [](const TN& p) { return 2 * (p.alpha - 1); },
                      },
                      instance);
}

double min_nonzero(Weights w) {
    if (w.delta == 0.0) return w.gamma;
    if (w.gamma == 0.0) return w.delta;
    return std::min(w.gamma, w.delta);
}

}  // namespace

ClassSpec ClassSpec::make(int start_index, double budget, WeightFn weights, int horizon) {
    if (start_index < 2) throw std::invalid_argument("ClassSpec: start index must be >= 2");
    if (!(std::isfinite(budget) && budget > 0.0)) {
        throw std::invalid_argument("ClassSpec: budget must be a positive finite number");
    }
    if (!weights) throw std::invalid_argument("ClassSpec: missing weight function");

    const Weights first = weights(start_index);
    if (!(first.gamma > 0.0)) throw std::invalid_argument("ClassSpec: gamma_k must be > 0");
    if (!(first.delta >= 0.0)) throw std::invalid_argument("ClassSpec: delta_k must be >= 0");
    const bool analytic_only = first.delta == 0.0;
    const double alpha = min_nonzero(first);

    for (int m = start_index; m <= std::max(horizon, start_index); ++m) {
        const Weights w = weights(m);
        if (std::isnan(w.gamma) || !(w.gamma >= alpha)) {
            throw std::invalid_argument("ClassSpec: gamma_" + std::to_string(m) +
                                        " is below alpha_k");
        }
        if (analytic_only) {
            if (w.delta != 0.0) {
                throw std::invalid_argument("ClassSpec: delta vanishes at k but not at m = " +
                                            std::to_string(m));
            }
        } else if (std::isnan(w.delta) || !(w.delta >= alpha)) {
            throw std::invalid_argument("ClassSpec: delta_" + std::to_string(m) +
                                        " is below alpha_k");
        }
    }

    ClassSpec spec;
    spec.start_index_ = start_index;
    spec.budget_ = budget;
    spec.alpha_ = alpha;
    spec.analytic_only_ = analytic_only;
    spec.weights_ = std::move(weights);
    return spec;
}

Weights ClassSpec::weights(int m) const {
    if (m < start_index_) {
        throw std::domain_error("ClassSpec::weights: degree below start index");
    }
    return weights_(m);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "sstarstar_tau", "sstar_tau", "sconv_tau", "fh0", "kstq", "rh0",
        "t_general",     "t_starlike", "t_convex", "tm",  "tn"};
    return names;
}

std::string class_name(const ClassInstance& instance) {
    return catalog_names().at(instance.index());
}

std::vector<std::pair<std::string, double>> class_params(const ClassInstance& instance) {
    using Params = std::vector<std::pair<std::string, double>>;
    return std::visit(overloaded{
                          [](const SStarStarTau& p) { return Params{{"C", p.C}, {"D", p.D}}; },
                          [](const SStarTau& p) { return Params{{"C", p.C}, {"D", p.D}}; },
                          [](const SConvTau& p) { return Params{{"C", p.C}, {"D", p.D}}; },
                          [](const FH0& p) { return Params{{"lambda", p.lambda}}; },
                          [](const KSTq& p) {
                              return Params{{"k", p.k}, {"q", p.q}, {"alpha", p.alpha}};
                          },
                          [](const RH0& p) { return Params{{"beta", p.beta}}; },
                          [](const TGeneral& p) {
                              return Params{{"alpha", p.alpha}, {"g2", p.g2}};
                          },
                          [](const TStarlike& p) { return Params{{"alpha", p.alpha}}; },
                          [](const TConvex& p) { return Params{{"alpha", p.alpha}}; },
                          [](const TM& p) { return Params{{"mu", p.mu}, {"alpha", p.alpha}}; },
                          [](const TN& p) { return Params{{"mu", p.mu}, {"alpha", p.alpha}}; },
                      },
                      instance);
}

ClassInstance make_instance(const std::string& name, const ParamMap& params) {
    auto take = [&](std::initializer_list<const char*> keys) {
        std::vector<double> values;
        std::set<std::string> expected;
        for (const char* key : keys) {
            expected.insert(key);
            auto it = params.find(key);
            if (it == params.end()) {
                throw std::invalid_argument(name + ": missing parameter '" + key + "'");
            }
            values.push_back(it->second);
        }
        for (const auto& [key, value] : params) {
            if (!expected.count(key)) {
                throw std::invalid_argument(name + ": unexpected parameter '" + key + "'");
            }
        }
        return values;
    };

    if (name == "sstarstar_tau") { auto v = take({"C", "D"}); return SStarStarTau{v[0], v[1]}; }
    if (name == "sstar_tau") { auto v = take({"C", "D"}); return SStarTau{v[0], v[1]}; }
    if (name == "sconv_tau") { auto v = take({"C", "D"}); return SConvTau{v[0], v[1]}; }
    if (name == "fh0") { auto v = take({"lambda"}); return FH0{v[0]}; }
    if (name == "kstq") { auto v = take({"k", "q", "alpha"}); return KSTq{v[0], v[1], v[2]}; }
    if (name == "rh0") { auto v = take({"beta"}); return RH0{v[0]}; }
    if (name == "t_general") { auto v = take({"alpha", "g2"}); return TGeneral{v[0], v[1], {}}; }
    if (name == "t_starlike") { auto v = take({"alpha"}); return TStarlike{v[0]}; }
    if (name == "t_convex") { auto v = take({"alpha"}); return TConvex{v[0]}; }
    if (name == "tm") { auto v = take({"mu", "alpha"}); return TM{v[0], v[1]}; }
    if (name == "tn") { auto v = take({"mu", "alpha"}); return TN{v[0], v[1]}; }

    std::ostringstream msg;
    msg << "unknown class '" << name << "'; valid classes:";
    for (const auto& known : catalog_names()) msg << ' ' << known;
    throw std::invalid_argument(msg.str());
}

std::string describe(const ClassInstance& instance) {
    std::string out = class_name(instance) + "(";
    bool first = true;
    for (const auto& [key, value] : class_params(instance)) {
        if (!first) out += ',';
        first = false;
        out += key + "=" + shortest(value);
    }
    return out + ")";
}

ParamValidation validate_params(const ClassInstance& instance) {
    ParamValidation out;
    if (auto msg = domain_error_message(instance); !msg.empty()) {
        out.message = msg;
        return out;
    }
    if (const auto* general = std::get_if<TGeneral>(&instance)) {
        const auto g = general_sequence(*general);
        const double g2 = g(2);
        for (int m = 3; m <= kWeightScanHorizon; ++m) {
            if (!(g(m) >= g2)) {
                out.message = "requires g_m >= g_2 (fails at m = " + std::to_string(m) + ")";
                return out;
            }
        }
    }
    out.valid = true;
    out.degenerate = raw_budget(instance) >= min_nonzero(raw_weights(instance, 2));
    if (out.degenerate) out.message = "degenerate: budget >= alpha_2, covering radius is 0";
    return out;
}

double q_bracket(int m, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("q_bracket: requires 0 < q < 1");
    if (m < 1) throw std::domain_error("q_bracket: requires m >= 1");
    if (m == 1) return 1.0;
    return (std::pow(q, m) - std::pow(q, -m)) / (q - 1.0 / q);
}

Weights weights(const ClassInstance& instance, int m) {
    require_domain(instance);
    if (m < 2) throw std::domain_error("weights: degree below start index 2");
    return raw_weights(instance, m);
}

double budget(const ClassInstance& instance) {
    require_domain(instance);
    return raw_budget(instance);
}

double alpha_min(const ClassInstance& instance) {
    require_domain(instance);
    return min_nonzero(raw_weights(instance, 2));
}

ClassSpec to_spec(const ClassInstance& instance) {
    const auto verdict = validate_params(instance);
    if (!verdict.valid) {
        throw std::invalid_argument(class_name(instance) + ": " + verdict.message);
    }
    return ClassSpec::make(2, raw_budget(instance),
                           [instance](int m) { return raw_weights(instance, m); });
}

MembershipVerdict membership_check(const ClassSpec& spec, const HarmonicPolynomialMap& f) {
    if (!f.is_identity() && f.min_degree() < spec.start_index()) {
        throw std::domain_error("membership_check: support below the start index");
    }
    double sum = 0.0;
    auto accumulate = [&](const CoeffTable& table, bool analytic) {
        for (const auto& [degree, value] : table) {
            const Weights w = spec.weights(degree);
            const double weight = analytic ? w.gamma : w.delta;
            // A zero weight leaves the coefficient outside any analytic-only class.
            sum += weight == 0.0 ? INFINITY : weight * std::abs(value);
        }
    };
    accumulate(f.analytic(), true);
    accumulate(f.coanalytic(), false);

    MembershipVerdict out;
    out.weighted_sum = sum;
    out.margin = spec.budget() - sum;
    out.member = sum <= spec.budget() + kMembershipSlack;
    return out;
}

HarmonicPolynomialMap extremal(const ClassSpec& spec, Part part, Sign sign) {
    if (part == Part::anti_analytic && spec.analytic_only()) {
        throw std::invalid_argument("extremal: anti-analytic witness needs nonzero delta weights");
    }
    const double coeff = (sign == Sign::plus ? 1.0 : -1.0) * spec.ratio();
    CoeffTable table{{spec.start_index(), Complex{coeff, 0.0}}};
    if (part == Part::analytic) return HarmonicPolynomialMap(std::move(table), {});
    return HarmonicPolynomialMap({}, std::move(table));
}

HarmonicPolynomialMap random_member(const ClassSpec& spec, int max_degree, std::uint64_t seed,
                                    std::optional<double> fill) {
    const int k = spec.start_index();
    if (max_degree < k) throw std::domain_error("random_member: max_degree below start index");
    if (fill && !(*fill >= 0.0 && *fill <= 1.0)) {
        throw std::domain_error("random_member: fill must lie in [0, 1]");
    }

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution include(0.5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

    struct Term {
        int degree;
        bool analytic;
        double magnitude;
        double angle;
    };
    std::vector<Term> terms;
    for (int m = k; m <= max_degree; ++m) {
        if (include(rng)) terms.push_back({m, true, unit(rng), phase(rng)});
        if (!spec.analytic_only() && include(rng)) terms.push_back({m, false, unit(rng), phase(rng)});
    }
    if (terms.empty()) terms.push_back({k, true, unit(rng), phase(rng)});
    const double u = fill ? *fill : unit(rng);

    double weighted = 0.0;
    for (const auto& t : terms) {
        const Weights w = spec.weights(t.degree);
        weighted += (t.analytic ? w.gamma : w.delta) * t.magnitude;
    }
    if (u == 0.0 || !(weighted > 0.0) || !std::isfinite(weighted)) return {};

    const double scale = u * spec.budget() / weighted;
    CoeffTable analytic;
    CoeffTable coanalytic;
    for (const auto& t : terms) {
        (t.analytic ? analytic : coanalytic)[t.degree] = std::polar(t.magnitude * scale, t.angle);
    }
    return HarmonicPolynomialMap(std::move(analytic), std::move(coanalytic));
}

}  // namespace bohrlab
