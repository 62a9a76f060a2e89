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

#include "bohrlab/json_io.hpp"

#include <stdexcept>
#include <string>

namespace bohrlab {

using nlohmann::json;

namespace {

json table_to_json(const CoeffTable& table) {
    json out = json::object();
    for (const auto& [degree, value] : table) {
        out[std::to_string(degree)] = json::array({value.real(), value.imag()});
    }
    return out;
}

CoeffTable table_from_json(const json& j, const char* key) {
    CoeffTable table;
    if (!j.contains(key)) return table;
    const json& part = j.at(key);
    if (!part.is_object()) throw std::invalid_argument(std::string("map JSON: '") + key + "' must be an object");
    for (const auto& [degree_text, value] : part.items()) {
        std::size_t used = 0;
        int degree = 0;
        try {
            degree = std::stoi(degree_text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != degree_text.size() || degree_text.empty()) {
            throw std::invalid_argument("map JSON: degree key '" + degree_text + "' is not an integer");
        }
        if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
            throw std::invalid_argument("map JSON: coefficient must be [re, im]");
        }
        table[degree] = Complex{value[0].get<double>(), value[1].get<double>()};
    }
    return table;
}

}  // namespace

json map_to_json(const HarmonicPolynomialMap& f) {
    return json{{"a", table_to_json(f.analytic())}, {"b", table_to_json(f.coanalytic())}};
}

HarmonicPolynomialMap map_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("map JSON: expected an object");
    return HarmonicPolynomialMap(table_from_json(j, "a"), table_from_json(j, "b"));
}

json instance_to_json(const ClassInstance& instance) {
    json params = json::object();
    for (const auto& [key, value] : class_params(instance)) params[key] = value;
    return json{{"class", class_name(instance)}, {"params", params}};
}

ClassInstance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("class") || !j.at("class").is_string()) {
        throw std::invalid_argument("instance JSON: expected {\"class\": name, \"params\": {...}}");
    }
    ParamMap params;
    if (j.contains("params")) {
        if (!j.at("params").is_object()) throw std::invalid_argument("instance JSON: params must be an object");
        for (const auto& [key, value] : j.at("params").items()) {
            if (!value.is_number()) throw std::invalid_argument("instance JSON: param '" + key + "' must be a number");
            params[key] = value.get<double>();
        }
    }
    return make_instance(j.at("class").get<std::string>(), params);
}

json result_to_json(const RadiusResult& result) {
    return json{{"value", result.value},
                {"method", to_string(result.method)},
                {"residual", result.residual},
                {"tail_bound", result.tail_bound},
                {"note", result.note}};
}

json report_to_json(const VerificationReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"instance", f.instance},
                            {"witness", f.witness},
                            {"seed", f.seed},
                            {"quantity", f.quantity},
                            {"lhs", f.lhs},
                            {"rhs", f.rhs},
                            {"margin", f.margin}});
    }
    return json{{"suite", report.suite},
                {"cases_run", report.cases_run},
                {"passed", report.passed()},
                {"failures", failures},
                {"notices", report.notices}};
}

}  // namespace bohrlab
