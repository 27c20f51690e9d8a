// Copyright 2026 The terratail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TERRATAIL_JSON_IO_HPP_
#define TERRATAIL_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "terratail/types.hpp"

namespace terratail {

// JSON schemas, all versioned with "schema_version": 1 and carrying a
// "units" field: "si" (m, m^2, N/m, ...) or "cm" (cm, cm^2, N/cm, N/cm per
// cm^2, N/cm^3 — the units experimental data is reported in). Parsers accept
// either; serializers emit "si" by default, which round-trips doubles
// exactly, or "cm" for files meant to be read next to lab numbers.

enum class JsonUnits { kSi, kCm };

nlohmann::json to_json(const Substrate& s, JsonUnits units = JsonUnits::kSi);
nlohmann::json to_json(const TailGeometry& t,
                       JsonUnits units = JsonUnits::kSi);
nlohmann::json to_json(const BodyProfile& p, JsonUnits units = JsonUnits::kSi);
nlohmann::json to_json(const RobotParams& r, JsonUnits units = JsonUnits::kSi);
nlohmann::json to_json(const TailMode& m);

Substrate substrate_from_json(const nlohmann::json& j);
TailGeometry tail_geometry_from_json(const nlohmann::json& j);
BodyProfile body_profile_from_json(const nlohmann::json& j);
RobotParams robot_params_from_json(const nlohmann::json& j);
TailMode tail_mode_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace terratail

#endif  // TERRATAIL_JSON_IO_HPP_
