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

#ifndef BOHRLAB_JSON_IO_HPP
#define BOHRLAB_JSON_IO_HPP

#include <json.hpp>

#include "bohrlab/classes.hpp"
#include "bohrlab/coeffs.hpp"
#include "bohrlab/solver.hpp"
#include "bohrlab/verify.hpp"

namespace bohrlab {

// {"a": {"2": [re, im], ...}, "b": {...}}
nlohmann::json map_to_json(const HarmonicPolynomialMap& f);
HarmonicPolynomialMap map_from_json(const nlohmann::json& j);

// {"class": "<name>", "params": {...}}
nlohmann::json instance_to_json(const ClassInstance& instance);
ClassInstance instance_from_json(const nlohmann::json& j);

// {"value", "method", "residual", "tail_bound", "note"}
nlohmann::json result_to_json(const RadiusResult& result);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace bohrlab

#endif  // BOHRLAB_JSON_IO_HPP
