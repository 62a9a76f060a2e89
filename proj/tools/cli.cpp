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

#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "bohrlab/json_io.hpp"
#include "bohrlab/parallel.hpp"
#include "bohrlab/solver.hpp"
#include "bohrlab/verify.hpp"
#include "bohrlab/wclass.hpp"

namespace bohrlab::cli {

namespace {

const char* const kWClassName = "w";

double parse_number(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw std::invalid_argument("cannot parse " + what + " '" + text + "' as a number");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, sep)) parts.push_back(current);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string valid_class_list() {
    std::string out;
    for (const auto& name : catalog_names()) out += name + " ";
    return out + kWClassName;
}

WParams w_params_from(const ParamMap& params, double tol) {
    for (const auto& [key, value] : params) {
        if (key != "mu" && key != "rho") {
            throw std::invalid_argument("w: unexpected parameter '" + key + "'");
        }
    }
    if (!params.count("mu") || !params.count("rho")) {
        throw std::invalid_argument("w: requires parameters mu and rho");
    }
    WParams p{params.at("mu"), params.at("rho"), tol};
    validate(p);
    return p;
}

// Catalog instance or W parameters from a class name.
struct Target {
    bool is_w = false;
    ClassInstance instance = RH0{2.0};
    WParams w;
};

Target make_target(const std::string& name, const ParamMap& params, double tol) {
    Target target;
    if (name == kWClassName) {
        target.is_w = true;
        target.w = w_params_from(params, tol);
        return target;
    }
    bool known = false;
    for (const auto& n : catalog_names()) known = known || n == name;
    if (!known) {
        throw std::invalid_argument("unknown class '" + name + "'; valid classes: " + valid_class_list());
    }
    target.instance = make_instance(name, params);
    const auto verdict = validate_params(target.instance);
    if (!verdict.valid) throw std::invalid_argument(name + ": " + verdict.message);
    return target;
}

std::string result_text(const RadiusResult& r) {
    std::ostringstream os;
    os << "value: " << fmt17(r.value) << '\n'
       << "method: " << to_string(r.method) << '\n'
       << "residual: " << fmt17(r.residual) << '\n'
       << "tail_bound: " << fmt17(r.tail_bound) << '\n';
    if (!r.note.empty()) os << "note: " << r.note << '\n';
    return os.str();
}

// One table row's computed columns: t, radius, covering, residual, method.
std::string table_cells(const std::string& name, const ParamMap& params, double tol) {
    const double nan = std::nan("");
    try {
        const Target target = make_target(name, params, tol);
        if (target.is_w) {
            const RadiusResult r = w_bohr_radius(target.w);
            return fmt17(nan) + "," + fmt17(r.value) + "," + fmt17(w_rhs(target.w).value) + "," +
                   fmt17(r.residual) + "," + to_string(r.method);
        }
        const double t = budget(target.instance) / alpha_min(target.instance);
        const RadiusResult r = bohr_radius_for(target.instance, tol);
        return fmt17(t) + "," + fmt17(r.value) + "," + fmt17(covering_radius(t)) + "," +
               fmt17(r.residual) + "," + to_string(r.method);
    } catch (const std::invalid_argument&) {
        return fmt17(nan) + "," + fmt17(nan) + "," + fmt17(nan) + "," + fmt17(nan) + ",invalid";
    }
}

int cmd_radius(const std::string& name, const std::string& params_text, double tol, bool as_json,
               std::ostream& out) {
    const Target target = make_target(name, parse_params(params_text), tol);
    const RadiusResult result =
        target.is_w ? w_bohr_radius(target.w) : bohr_radius_for(target.instance, tol);
    if (as_json) {
        out << result_to_json(result).dump() << '\n';
    } else {
        out << result_text(result);
    }
    return kExitOk;
}

int cmd_table(const std::string& name, const std::string& grid_text, const std::string& fixed_text,
              const std::string& path, double tol, bool as_json, std::ostream& out) {
    const auto axes = parse_grid(grid_text);
    const ParamMap fixed = parse_params(fixed_text);
    const std::size_t cells = grid_size(axes);
    if (cells > kMaxGridCells) {
        throw std::invalid_argument("grid has " + std::to_string(cells) + " cells (cap " +
                                    std::to_string(kMaxGridCells) + ")");
    }
    if (name != kWClassName) {
        bool known = false;
        for (const auto& n : catalog_names()) known = known || n == name;
        if (!known) {
            throw std::invalid_argument("unknown class '" + name + "'; valid classes: " + valid_class_list());
        }
    }
    for (const auto& axis : axes) {
        if (fixed.count(axis.name)) {
            throw std::invalid_argument("parameter '" + axis.name + "' given in both --grid and --params");
        }
    }

    auto rows = parallel_map(cells, [&](std::size_t cell) {
        // Row-major: the first axis varies slowest.
        std::vector<std::size_t> index(axes.size());
        std::size_t rest = cell;
        for (std::size_t a = axes.size(); a-- > 0;) {
            index[a] = rest % axes[a].values.size();
            rest /= axes[a].values.size();
        }
        ParamMap params = fixed;
        std::string row;
        for (std::size_t a = 0; a < axes.size(); ++a) {
            const double v = axes[a].values[index[a]];
            params[axes[a].name] = v;
            row += fmt17(v) + ",";
        }
        return row + table_cells(name, params, tol);
    });

    std::string csv;
    for (const auto& axis : axes) csv += axis.name + ",";
    csv += "t,radius,covering,residual,method\n";
    for (const auto& row : rows) csv += row + "\n";
    write_atomically(path, csv);
    if (as_json) {
        out << nlohmann::json{{"out", path}, {"rows", rows.size()}}.dump() << '\n';
    } else {
        out << "wrote " << rows.size() << " rows to " << path << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite_name, std::uint64_t seed, int cases, bool as_json,
               std::ostream& out, std::ostream& err) {
    const auto suite = parse_suite(suite_name);
    if (!suite) throw std::invalid_argument("unknown suite '" + suite_name + "'; valid: all growth bohr sharpness");
    if (cases < 0) throw std::invalid_argument("--cases must be >= 0");
    const VerificationReport report = run_suite(default_suite_config(*suite, seed, cases));
    if (as_json) {
        out << report_to_json(report).dump(2) << '\n';
    } else {
        out << format_report_text(report);
    }
    err << "elapsed: " << report.elapsed_seconds << " s\n";
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_curve(const std::string& name, const std::string& params_text, int samples,
              const std::string& path, double tol, bool as_json, std::ostream& out,
              std::ostream& err) {
    if (samples < kMinCurveSamples) {
        throw std::invalid_argument("--samples must be at least " + std::to_string(kMinCurveSamples));
    }
    const ParamMap params = parse_params(params_text);
    std::string csv = "r,majorant_extremal,distance_lower\n";
    bool flagged = false;
    if (name == kWClassName) {
        const WParams p = w_params_from(params, tol);
        const double lower = w_rhs(p).value;
        for (int i = 0; i < samples; ++i) {
            const double r = static_cast<double>(i) / samples;
            csv += fmt17(r) + "," + fmt17(r + w_majorant_series(r, p).value) + "," + fmt17(lower) + "\n";
        }
    } else {
        const Target target = make_target(name, params, tol);
        const ClassSpec spec = to_spec(target.instance);
        const HarmonicPolynomialMap f = extremal(spec, Part::analytic, Sign::minus);
        const double lower = 1.0 - spec.ratio();
        flagged = lower <= 0.0;
        for (int i = 0; i < samples; ++i) {
            const double r = static_cast<double>(i) / samples;
            csv += fmt17(r) + "," + fmt17(majorant(f, r)) + "," + fmt17(lower) + "\n";
        }
    }
    write_atomically(path, csv);
    if (flagged) err << "warning: degenerate instance, distance_lower <= 0\n";
    if (as_json) {
        out << nlohmann::json{{"out", path}, {"rows", samples}, {"degenerate", flagged}}.dump() << '\n';
    } else {
        out << "wrote " << samples << " rows to " << path << '\n';
    }
    return kExitOk;
}

}  // namespace

ParamMap parse_params(const std::string& text) {
    ParamMap params;
    if (text.empty()) return params;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("malformed parameter '" + item + "' (expected key=value)");
        }
        const std::string key = item.substr(0, eq);
        if (params.count(key)) throw std::invalid_argument("duplicate parameter '" + key + "'");
        params[key] = parse_number(item.substr(eq + 1), "parameter " + key);
    }
    return params;
}

std::vector<GridAxis> parse_grid(const std::string& text) {
    std::vector<GridAxis> axes;
    if (text.empty()) throw std::invalid_argument("empty --grid");
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("malformed grid axis '" + item + "' (expected name=lo:hi:step)");
        }
        const auto range = split(item.substr(eq + 1), ':');
        if (range.size() != 3) {
            throw std::invalid_argument("malformed grid axis '" + item + "' (expected name=lo:hi:step)");
        }
        GridAxis axis;
        axis.name = item.substr(0, eq);
        for (const auto& existing : axes) {
            if (existing.name == axis.name) throw std::invalid_argument("duplicate grid axis '" + axis.name + "'");
        }
        const double lo = parse_number(range[0], "grid lo");
        const double hi = parse_number(range[1], "grid hi");
        const double step = parse_number(range[2], "grid step");
        if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi)) {
            throw std::invalid_argument("grid axis '" + axis.name + "' needs finite lo <= hi");
        }
        if (!(std::isfinite(step) && step > 0.0)) {
            throw std::invalid_argument("grid axis '" + axis.name + "' needs step > 0");
        }
        const double span = std::floor((hi - lo) / step + 1e-9);
        if (span + 1.0 > static_cast<double>(kMaxGridCells)) {
            throw std::invalid_argument("grid axis '" + axis.name + "' exceeds the cell cap");
        }
        const auto count = static_cast<std::size_t>(span) + 1;
        for (std::size_t i = 0; i < count; ++i) {
            axis.values.push_back(std::min(lo + static_cast<double>(i) * step, hi));
        }
        axes.push_back(std::move(axis));
    }
    return axes;
}

std::size_t grid_size(const std::vector<GridAxis>& axes) {
    std::size_t cells = 1;
    for (const auto& axis : axes) {
        if (axis.values.empty()) return 0;
        if (cells > kMaxGridCells) return cells;
        cells *= axis.values.size();
    }
    return cells;
}

void write_atomically(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot write '" + path + "'");
        file << contents;
        file.flush();
        if (!file) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("cannot write '" + path + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot move output into '" + path + "'");
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bohr radii, growth envelopes and covering radii for weighted harmonic classes"};
    app.require_subcommand(1);

    std::string class_name_opt;
    std::string params_text;
    std::string grid_text;
    std::string out_path;
    std::string suite_name = "all";
    double tol = 1e-10;
    std::uint64_t seed = 1;
    int cases = 100;
    int samples = 0;
    bool as_json = false;

    auto* radius = app.add_subcommand("radius", "Bohr radius for one class instance");
    radius->add_option("--class", class_name_opt, "class name")->required();
    radius->add_option("--params", params_text, "k=v[,k=v...]");
    radius->add_option("--tol", tol, "root/series tolerance");
    radius->add_flag("--json", as_json, "JSON output");

    auto* table = app.add_subcommand("table", "radius table over a parameter grid");
    table->add_option("--class", class_name_opt, "class name")->required();
    table->add_option("--grid", grid_text, "name=lo:hi:step[,...]")->required();
    table->add_option("--params", params_text, "fixed parameters k=v[,...]");
    table->add_option("--out", out_path, "CSV output path")->required();
    table->add_option("--tol", tol, "root/series tolerance");
    table->add_flag("--json", as_json, "JSON summary on stdout");

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", suite_name, "all|growth|bohr|sharpness");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--cases", cases, "random members per instance");
    verify->add_flag("--json", as_json, "JSON report");

    auto* curve = app.add_subcommand("curve", "majorant of the extremal map vs distance lower bound");
    curve->add_option("--class", class_name_opt, "class name")->required();
    curve->add_option("--params", params_text, "k=v[,k=v...]");
    curve->add_option("--samples", samples, "number of r samples")->required();
    curve->add_option("--out", out_path, "CSV output path")->required();
    curve->add_option("--tol", tol, "series tolerance (w only)");
    curve->add_flag("--json", as_json, "JSON summary on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream cli_out;
        std::ostringstream cli_err;
        app.exit(e, cli_out, cli_err);
        out << cli_out.str();
        err << cli_err.str();
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (radius->parsed()) return cmd_radius(class_name_opt, params_text, tol, as_json, out);
        if (table->parsed()) {
            return cmd_table(class_name_opt, grid_text, params_text, out_path, tol, as_json, out);
        }
        if (verify->parsed()) return cmd_verify(suite_name, seed, cases, as_json, out, err);
        if (curve->parsed()) {
            return cmd_curve(class_name_opt, params_text, samples, out_path, tol, as_json, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bohrlab::cli
