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

#include "bohrlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bohrlab/oracle.hpp"
#include "bohrlab/parallel.hpp"
#include "bohrlab/solver.hpp"

namespace bohrlab {

namespace {

// Tracks the worst (smallest) margin of lhs <= rhs comparisons.
class WorstCase {
public:
    void compare(const char* quantity, double lhs, double rhs) {
        const double margin = rhs - lhs;
        if (!seen_ || margin < margin_ || std::isnan(margin)) {
            seen_ = true;
            quantity_ = quantity;
            lhs_ = lhs;
            rhs_ = rhs;
            margin_ = margin;
        }
    }

    VerificationReport finish(std::string instance, const WitnessTag& tag) const {
        VerificationReport report;
        report.cases_run = 1;
        if (seen_ && !(margin_ >= 0.0)) {
            report.failures.push_back(
                {std::move(instance), tag.label, tag.seed, quantity_, lhs_, rhs_, margin_});
        }
        return report;
    }

private:
    bool seen_ = false;
    std::string quantity_;
    double lhs_ = 0.0;
    double rhs_ = 0.0;
    double margin_ = 0.0;
};

double ratio_of(const ClassInstance& instance) {
    return budget(instance) / alpha_min(instance);
}

std::string describe(const WParams& p) {
    std::ostringstream os;
    os.precision(17);
    os << "w(mu=" << p.mu << ",rho=" << p.rho << ")";
    return os.str();
}

// Bound on sum_{m>N} |a_m| r^m for the W extremal truncated at degree N.
double w_truncation_tail(const WParams& p, int degree, double r) {
    if (r <= 0.0) return 0.0;
    if (r >= 1.0) return INFINITY;
    return w_coeff_bound(degree + 1, p) * std::pow(r, degree + 1) / (1.0 - r);
}

std::string sharpness_notice(const std::string& name, const char* what) {
    return name + ": sharpness " + what;
}

}  // namespace

void VerificationReport::absorb(const VerificationReport& other) {
    cases_run += other.cases_run;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notices.insert(notices.end(), other.notices.begin(), other.notices.end());
}

VerificationReport check_growth(const ClassInstance& instance, const HarmonicPolynomialMap& f,
                                int n_r, int n_theta, const WitnessTag& tag) {
    if (n_r < 1 || n_theta < 1) throw std::invalid_argument("check_growth: empty grid");
    const double t = ratio_of(instance);
    WorstCase worst;
    for (int i = 1; i <= n_r; ++i) {
        const double r = static_cast<double>(i) / n_r;
        const auto [lower, upper] = growth_envelope(t, r);
        for (int j = 0; j < n_theta; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / n_theta;
            const double modulus = std::abs(evaluate(f, std::polar(r, theta)));
            worst.compare("growth_lower", std::max(lower, 0.0) - kCheckSlack, modulus);
            worst.compare("growth_upper", modulus, upper + kCheckSlack);
        }
    }
    auto report = worst.finish(describe(instance), tag);
    report.suite = "growth";
    return report;
}

VerificationReport check_growth(const WParams& params, const HarmonicPolynomialMap& f, int n_r,
                                int n_theta, const WitnessTag& tag) {
    if (n_r < 1 || n_theta < 1) throw std::invalid_argument("check_growth: empty grid");
    const int degree = f.max_degree();
    WorstCase worst;
    for (int i = 1; i <= n_r; ++i) {
        const double r = static_cast<double>(i) / (n_r + 1);
        const SeriesValue lower = w_growth_lower(r, params);
        const double slack = kCheckSlack + lower.tail_bound + w_truncation_tail(params, degree, r);
        for (int j = 0; j < n_theta; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / n_theta;
            const double modulus = std::abs(evaluate(f, std::polar(r, theta)));
            worst.compare("growth_lower", lower.value - slack, modulus);
        }
    }
    auto report = worst.finish(describe(params), tag);
    report.suite = "growth";
    return report;
}

VerificationReport check_bohr(const ClassInstance& instance, const HarmonicPolynomialMap& f,
                              int n_r, const WitnessTag& tag) {
    if (n_r < 1) throw std::invalid_argument("check_bohr: empty grid");
    const double t = ratio_of(instance);
    const double radius = bohr_radius_for(instance).value;
    const double cover = covering_radius(t);
    WorstCase worst;
    for (int i = 0; i <= n_r; ++i) {
        const double r = radius * i / n_r;
        const double lhs = majorant(f, r);
        worst.compare("bohr_intermediate", lhs, r + t * r * r + kCheckSlack);
        worst.compare("bohr_covering", lhs, cover + kCheckSlack);
    }
    auto report = worst.finish(describe(instance), tag);
    report.suite = "bohr";
    return report;
}

VerificationReport check_bohr(const WParams& params, const HarmonicPolynomialMap& f, int n_r,
                              const WitnessTag& tag) {
    if (n_r < 1) throw std::invalid_argument("check_bohr: empty grid");
    const RadiusResult radius = w_bohr_radius(params);
    const SeriesValue rhs = w_rhs(params);
    WorstCase worst;
    for (int i = 0; i <= n_r; ++i) {
        const double r = radius.value * i / n_r;
        worst.compare("bohr_covering", majorant(f, r),
                      rhs.value + rhs.tail_bound + radius.residual + radius.tail_bound +
                          kCheckSlack);
    }
    auto report = worst.finish(describe(params), tag);
    report.suite = "bohr";
    return report;
}

VerificationReport check_sharpness(const ClassInstance& instance, double epsilon) {
    VerificationReport report;
    report.suite = "sharpness";
    const std::string name = describe(instance);
    const auto verdict = validate_params(instance);
    if (!verdict.valid) throw std::invalid_argument(name + ": " + verdict.message);
    if (verdict.degenerate) {
        report.notices.push_back(sharpness_notice(name, "skipped: degenerate instance"));
        return report;
    }

    const ClassSpec spec = to_spec(instance);
    const HarmonicPolynomialMap f = extremal(spec, Part::analytic, Sign::minus);
    const double radius = bohr_radius_for(instance).value;
    const DistanceEstimate distance = boundary_distance(f);
    const double tol_total = distance.refinement_width + kSharpnessSlack;

    WorstCase equality;
    equality.compare("sharpness_equality", std::abs(majorant(f, radius) - distance.value),
                     tol_total);
    report.absorb(equality.finish(name, {"extremal", 0}));

    if (radius + epsilon <= 1.0) {
        WorstCase beyond;
        beyond.compare("sharpness_maximality", distance.value + tol_total,
                       majorant(f, radius + epsilon));
        report.absorb(beyond.finish(name, {"extremal", 0}));
    } else {
        report.notices.push_back(sharpness_notice(name, "maximality skipped: r* + epsilon > 1"));
    }
    return report;
}

VerificationReport check_sharpness(const WParams& params, double epsilon) {
    VerificationReport report;
    report.suite = "sharpness";
    const std::string name = describe(params);
    const RadiusResult radius = w_bohr_radius(params);
    if (radius.method == RadiusMethod::limit) {
        report.notices.push_back(sharpness_notice(name, "skipped: rho at the limit"));
        return report;
    }
    const HarmonicPolynomialMap f = w_extremal(params, kWExtremalDegree);
    const DistanceEstimate distance = boundary_distance(f);
    const double tol_total = distance.refinement_width + kSharpnessSlack + radius.tail_bound +
                             radius.residual +
                             w_truncation_tail(params, kWExtremalDegree, radius.value);

    WorstCase equality;
    equality.compare("sharpness_equality", std::abs(majorant(f, radius.value) - distance.value),
                     tol_total);
    report.absorb(equality.finish(name, {"extremal", 0}));

    if (radius.value + epsilon < 1.0) {
        const double beyond_tol =
            tol_total + w_truncation_tail(params, kWExtremalDegree, radius.value + epsilon);
        WorstCase beyond;
        beyond.compare("sharpness_maximality", distance.value + beyond_tol,
                       majorant(f, radius.value + epsilon));
        report.absorb(beyond.finish(name, {"extremal", 0}));
    } else {
        report.notices.push_back(sharpness_notice(name, "maximality skipped: r* + epsilon >= 1"));
    }
    return report;
}

std::optional<Suite> parse_suite(const std::string& name) {
    if (name == "all") return Suite::all;
    if (name == "growth") return Suite::growth;
    if (name == "bohr") return Suite::bohr;
    if (name == "sharpness") return Suite::sharpness;
    return std::nullopt;
}

std::string to_string(Suite suite) {
    switch (suite) {
        case Suite::all: return "all";
        case Suite::growth: return "growth";
        case Suite::bohr: return "bohr";
        case Suite::sharpness: return "sharpness";
    }
    return "unknown";
}

std::vector<ClassInstance> default_grid() {
    std::vector<ClassInstance> grid;
    const std::pair<double, double> janowski[] = {{-0.5, 0.5}, {0.0, 0.5}, {0.0, 1.0}, {0.25, 0.75}};
    for (auto [C, D] : janowski) grid.emplace_back(SStarStarTau{C, D});
    for (auto [C, D] : janowski) grid.emplace_back(SStarTau{C, D});
    for (auto [C, D] : janowski) grid.emplace_back(SConvTau{C, D});
    for (double lambda : {0.25, 0.5, 1.0}) grid.emplace_back(FH0{lambda});
    for (double k : {0.0, 1.0}) {
        for (double q : {0.3, 0.5, 0.8}) {
            for (double alpha : {0.0, 0.5}) grid.emplace_back(KSTq{k, q, alpha});
        }
    }
    for (double beta : {1.5, 2.0}) grid.emplace_back(RH0{beta});
    for (double mu : {0.0, 0.5, 1.0}) {
        for (double alpha : {1.25, 1.5}) grid.emplace_back(TM{mu, alpha});
    }
    for (double mu : {0.0, 0.5, 1.0}) {
        for (double alpha : {1.25, 1.5}) grid.emplace_back(TN{mu, alpha});
    }
    for (double alpha : {0.0, 0.5}) grid.emplace_back(TStarlike{alpha});
    for (double alpha : {0.0, 0.5}) grid.emplace_back(TConvex{alpha});
    grid.emplace_back(TGeneral{0.0, 2.0, {}});
    grid.emplace_back(TGeneral{0.5, 1.5, {}});
    return grid;
}

std::vector<WParams> default_w_grid() {
    std::vector<WParams> grid;
    for (double mu : {0.0, 0.5, 1.0, 2.0}) {
        for (double rho : {0.0, 0.25, 0.5, 0.75}) grid.push_back({mu, rho, 1e-10});
    }
    return grid;
}

SuiteConfig default_suite_config(Suite suite, std::uint64_t seed, int cases) {
    SuiteConfig config;
    config.suite = suite;
    config.seed = seed;
    config.cases = cases;
    config.grid = default_grid();
    config.w_grid = default_w_grid();
    return config;
}

std::uint64_t member_seed(std::uint64_t base, std::size_t instance, std::size_t index) {
    // splitmix64 finalizer over a combined key
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (instance * 1000003ull + index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

VerificationReport run_suite(const SuiteConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const bool growth = config.suite == Suite::all || config.suite == Suite::growth;
    const bool bohr = config.suite == Suite::all || config.suite == Suite::bohr;
    const bool sharp = config.suite == Suite::all || config.suite == Suite::sharpness;

    const std::size_t n_catalog = config.grid.size();
    const std::size_t n_total = n_catalog + config.w_grid.size();

    auto partials = parallel_map(n_total, [&](std::size_t i) {
        VerificationReport part;
        if (i >= n_catalog) {
            const WParams& params = config.w_grid[i - n_catalog];
            const HarmonicPolynomialMap f = w_extremal(params, kWExtremalDegree);
            const WitnessTag tag{"extremal", config.seed};
            if (growth) part.absorb(check_growth(params, f, config.n_r, config.n_theta, tag));
            if (bohr) part.absorb(check_bohr(params, f, config.n_r, tag));
            if (sharp) part.absorb(check_sharpness(params, config.epsilon));
            return part;
        }

        const ClassInstance& instance = config.grid[i];
        const auto verdict = validate_params(instance);
        if (!verdict.valid) {
            part.notices.push_back(describe(instance) + ": skipped, " + verdict.message);
            return part;
        }
        if (verdict.degenerate) {
            part.notices.push_back(describe(instance) + ": degenerate instance");
        }
        const ClassSpec spec = to_spec(instance);

        std::vector<std::pair<WitnessTag, HarmonicPolynomialMap>> witnesses;
        witnesses.push_back({{"identity", config.seed}, HarmonicPolynomialMap::identity()});
        witnesses.push_back({{"extremal_analytic_minus", config.seed},
                             extremal(spec, Part::analytic, Sign::minus)});
        witnesses.push_back({{"extremal_analytic_plus", config.seed},
                             extremal(spec, Part::analytic, Sign::plus)});
        if (!spec.analytic_only()) {
            witnesses.push_back({{"extremal_anti_analytic_minus", config.seed},
                                 extremal(spec, Part::anti_analytic, Sign::minus)});
            witnesses.push_back({{"extremal_anti_analytic_plus", config.seed},
                                 extremal(spec, Part::anti_analytic, Sign::plus)});
        }
        for (int j = 0; j < config.cases; ++j) {
            const std::uint64_t seed = member_seed(config.seed, i, static_cast<std::size_t>(j));
            witnesses.push_back({{"random_member", seed}, random_member(spec, config.max_degree, seed)});
        }
        for (const auto& extra : config.extra) {
            if (extra.instance_index == i) witnesses.push_back({{extra.label, config.seed}, extra.map});
        }

        for (const auto& [tag, f] : witnesses) {
            if (growth) part.absorb(check_growth(instance, f, config.n_r, config.n_theta, tag));
            if (bohr) part.absorb(check_bohr(instance, f, config.n_r, tag));
        }
        if (sharp) part.absorb(check_sharpness(instance, config.epsilon));
        return part;
    });

    VerificationReport report;
    report.suite = to_string(config.suite);
    for (const auto& part : partials) report.absorb(part);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string format_report_text(const VerificationReport& report) {
    std::ostringstream os;
    char buf[256];
    os << "suite: " << report.suite << '\n';
    os << "cases: " << report.cases_run << '\n';
    os << "failures: " << report.failures.size() << '\n';
    for (const auto& f : report.failures) {
        std::snprintf(buf, sizeof buf, "  FAIL %s [%s seed=%llu] %s: lhs=%.17g rhs=%.17g margin=%.17g",
                      f.instance.c_str(), f.witness.c_str(),
                      static_cast<unsigned long long>(f.seed), f.quantity.c_str(), f.lhs, f.rhs,
                      f.margin);
        os << buf << '\n';
    }
    for (const auto& n : report.notices) os << "  note: " << n << '\n';
    os << (report.passed() ? "PASSED" : "FAILED") << '\n';
    return os.str();
}

}  // namespace bohrlab
