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

#ifndef BOHRLAB_TOOLS_CLI_HPP
#define BOHRLAB_TOOLS_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "bohrlab/classes.hpp"

namespace bohrlab::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

inline constexpr std::size_t kMaxGridCells = 1'000'000;
inline constexpr int kMinCurveSamples = 16;

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

// "k=v,k=v" -> map. Throws std::invalid_argument on malformed input.
ParamMap parse_params(const std::string& text);

// "name=lo:hi:step,..." -> axes in flag order. Values are lo + i*step,
// clamped to hi. Throws std::invalid_argument on malformed input.
std::vector<GridAxis> parse_grid(const std::string& text);

std::size_t grid_size(const std::vector<GridAxis>& axes);

// Writes via a temporary sibling file and rename. Throws std::runtime_error.
void write_atomically(const std::string& path, const std::string& contents);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace bohrlab::cli

#endif  // BOHRLAB_TOOLS_CLI_HPP
