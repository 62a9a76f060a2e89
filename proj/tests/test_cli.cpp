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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "../tools/cli.hpp"
#include "bohrlab/solver.hpp"

using namespace bohrlab;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "bohrlab");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// Runs the installed binary; returns (exit status, stdout).
std::pair<int, std::string> shell(const std::string& args) {
    const std::string command = std::string(BOHRLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "bohrlab_test_cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

TEST_CASE("parse_params") {
    const auto p = cli::parse_params("mu=0.5,rho=0.25");
    CHECK(p.at("mu") == 0.5);
    CHECK(p.at("rho") == 0.25);
    CHECK(cli::parse_params("").empty());
    CHECK_THROWS_AS(cli::parse_params("mu"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_params("mu=abc"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_params("mu=1,mu=2"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_params("=1"), std::invalid_argument);
}

TEST_CASE("parse_grid") {
    const auto axes = cli::parse_grid("lambda=0.2:1.0:0.2");
    REQUIRE(axes.size() == 1);
    CHECK(axes[0].values.size() == 5);
    CHECK(axes[0].values.back() <= 1.0);
    CHECK(axes[0].values.back() == doctest::Approx(1.0));
    const auto two = cli::parse_grid("k=0:1:1,q=0.3:0.5:0.1");
    CHECK(cli::grid_size(two) == 6);
    CHECK(cli::parse_grid("a=1:1:0.5")[0].values.size() == 1);
    CHECK_THROWS_AS(cli::parse_grid("a=1:0:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_grid("a=0:1:0"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_grid("a=0:1"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_grid("a=0:1:0.5,a=0:1:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_grid("a=0:1e7:1"), std::invalid_argument);
}

TEST_CASE("grid cap") {
    CHECK(cli::grid_size(cli::parse_grid("a=0:999:1,b=0:999:1")) == 1'000'000);
    const auto r = invoke({"table", "--class", "fh0", "--grid", "lambda=0:1000:1,x=0:1000:1", "--out",
                           scratch("cap.csv").string()});
    CHECK(r.code == 1);
}

TEST_CASE("radius command") {
    const auto rh0 = invoke({"radius", "--class", "rh0", "--params", "beta=2"});
    CHECK(rh0.code == 0);
    CHECK(rh0.out.find("value: 0.4142135623730") != std::string::npos);

    const auto json = invoke({"radius", "--class", "rh0", "--params", "beta=2", "--json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"method\":\"closed_form\"") != std::string::npos);

    const auto w = invoke({"radius", "--class", "w", "--params", "mu=0,rho=0", "--tol", "1e-8"});
    CHECK(w.code == 0);
    CHECK(w.out.find("value: 0.68281") != std::string::npos);

    CHECK(invoke({"radius", "--class", "rh0", "--params", "beta=0.5"}).code == 1);
    const auto unknown = invoke({"radius", "--class", "nosuch", "--params", "x=1"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("t_starlike") != std::string::npos);
    CHECK(invoke({"radius", "--class", "w", "--params", "mu=0"}).code == 1);
    CHECK(invoke({"radius"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("table command") {
    const auto path = scratch("fh0.csv");
    const auto r = invoke({"table", "--class", "fh0", "--grid", "lambda=0.2:1.0:0.2", "--out", path.string()});
    REQUIRE(r.code == 0);
    const auto rows = read_csv(slurp(path));
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"lambda", "t", "radius", "covering", "residual", "method"});
    CHECK(std::stod(rows[5][2]) == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-12));
    CHECK(rows[5][5] == "closed_form");

    const auto deg_path = scratch("rh0.csv");
    REQUIRE(invoke({"table", "--class", "rh0", "--grid", "beta=2:4:1", "--out", deg_path.string()}).code == 0);
    const auto deg = read_csv(slurp(deg_path));
    REQUIRE(deg.size() == 4);
    CHECK(deg[3][5] == "degenerate");
    CHECK(std::stod(deg[3][2]) == 0.0);

    const auto invalid = scratch("invalid.csv");
    REQUIRE(invoke({"table", "--class", "rh0", "--grid", "beta=0.5:1.5:0.5", "--out", invalid.string()}).code == 0);
    CHECK(read_csv(slurp(invalid))[1][5] == "invalid");

    CHECK(invoke({"table", "--class", "fh0", "--grid", "lambda=0.2:1:0.2", "--out", "/nonexistent/dir/x.csv"}).code == 1);
    CHECK(invoke({"table", "--class", "fh0", "--grid", "lambda=0.2:1:0.2", "--params", "lambda=1", "--out",
                  path.string()}).code == 1);
}

TEST_CASE("table rows round-trip through recomputation") {
    const auto path = scratch("kstq.csv");
    REQUIRE(invoke({"table", "--class", "kstq", "--grid", "k=0:2:0.5,q=0.1:0.9:0.2", "--params", "alpha=0.25",
                    "--out", path.string()}).code == 0);
    const std::string text = slurp(path);
    const auto rows = read_csv(text);
    REQUIRE(rows.size() == 1 + 5 * 5);
    std::string rebuilt = "k,q,t,radius,covering,residual,method\n";
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const KSTq inst{std::stod(rows[i][0]), std::stod(rows[i][1]), 0.25};
        const double t = budget(inst) / alpha_min(inst);
        const auto r = bohr_radius_for(inst, 1e-10);
        rebuilt += rows[i][0] + "," + rows[i][1] + "," + fmt17(t) + "," + fmt17(r.value) + "," +
                   fmt17(covering_radius(t)) + "," + fmt17(r.residual) + "," + to_string(r.method) + "\n";
    }
    CHECK(rebuilt == text);

    const auto again = scratch("kstq2.csv");
    REQUIRE(invoke({"table", "--class", "kstq", "--grid", "k=0:2:0.5,q=0.1:0.9:0.2", "--params", "alpha=0.25",
                    "--out", again.string()}).code == 0);
    CHECK(slurp(again) == text);
}

TEST_CASE("curve command") {
    const auto path = scratch("curve.csv");
    REQUIRE(invoke({"curve", "--class", "rh0", "--params", "beta=2", "--samples", "100", "--out", path.string()}).code == 0);
    const auto rows = read_csv(slurp(path));
    REQUIRE(rows.size() == 101);
    CHECK(rows[0] == std::vector<std::string>{"r", "majorant_extremal", "distance_lower"});
    const double rstar = std::sqrt(2.0) - 1;
    int crossings = 0;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        const bool below = std::stod(rows[i][1]) <= std::stod(rows[i][2]);
        const bool next_below = std::stod(rows[i + 1][1]) <= std::stod(rows[i + 1][2]);
        if (below && !next_below) {
            ++crossings;
            CHECK(std::stod(rows[i][0]) <= rstar);
            CHECK(std::stod(rows[i + 1][0]) > rstar);
        }
    }
    CHECK(crossings == 1);

    const auto deg = invoke({"curve", "--class", "rh0", "--params", "beta=3", "--samples", "16", "--out",
                             scratch("deg.csv").string()});
    CHECK(deg.code == 0);
    CHECK(deg.err.find("degenerate") != std::string::npos);
    CHECK(std::stod(read_csv(slurp(scratch("deg.csv")))[1][2]) <= 0.0);

    CHECK(invoke({"curve", "--class", "rh0", "--params", "beta=2", "--samples", "1", "--out", path.string()}).code == 1);
}

TEST_CASE("verify exit codes") {
    CHECK(invoke({"verify", "--suite", "nosuch"}).code == 1);
    CHECK(invoke({"verify", "--cases", "-1"}).code == 1);
}

TEST_CASE("binary: exit-code contract") {
    const auto [code, out] = shell("radius --class rh0 --params beta=2");
    CHECK(code == 0);
    CHECK(out.find("0.4142135") != std::string::npos);
    CHECK(shell("radius --class w --params mu=0,rho=0 --tol 1e-8").first == 0);
    CHECK(shell("radius --class rh0 --params beta=0.5").first == 1);
    CHECK(shell("radius --class nosuch --params x=1").first == 1);
    CHECK(shell("verify --suite nosuch").first == 1);
    // catalog and W extremal witnesses satisfy the majorant side of the Bohr statement
    CHECK(shell("verify --suite bohr --cases 0").first == 0);
    // the W extremal violates the stated growth lower bound and sharpness
    CHECK(shell("verify --suite sharpness --cases 0").first == 2);
}
