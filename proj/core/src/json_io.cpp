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

#include "terratail/json_io.hpp"

#include <fstream>

#include "terratail/units.hpp"

namespace terratail {

namespace {

using nlohmann::json;

void check_schema(const json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": not an object");
  if (j.value("schema_version", 1) != 1)
    throw ParseError(std::string(what) + ": unsupported schema_version");
}

JsonUnits units_of(const json& j) {
  const std::string u = j.value("units", "si");
  if (u == "si") return JsonUnits::kSi;
  if (u == "cm") return JsonUnits::kCm;
  throw ParseError("unknown units '" + u + "' (expected \"si\" or \"cm\")");
}

double get_num(const json& j, const char* key) {
  if (!j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  if (!j.at(key).is_number())
    throw ParseError(std::string("field '") + key + "' is not a number");
  return j.at(key).get<double>();
}

const char* dk_model_name(DkModel m) {
  return m == DkModel::kConstant ? "constant" : "linear_in_area";
}

DkModel dk_model_from(const std::string& s) {
  if (s == "constant") return DkModel::kConstant;
  if (s == "linear_in_area") return DkModel::kLinearInArea;
  throw ParseError("unknown dk_model '" + s + "'");
}

}  // namespace

json to_json(const Substrate& s, JsonUnits units) {
  const bool cm = units == JsonUnits::kCm;
  return json{
      {"schema_version", 1},
      {"units", cm ? "cm" : "si"},
      {"cz", cm ? s.cz * units::kCzSiToCgs : s.cz},
      {"dk_small", cm ? s.dk_small * units::kNPerMToNPerCm : s.dk_small},
      {"dk_large", cm ? s.dk_large * units::kNPerMToNPerCm : s.dk_large},
      {"a_small", cm ? s.a_small * units::kM2ToCm2 : s.a_small},
      {"a_large", cm ? s.a_large * units::kM2ToCm2 : s.a_large},
      {"dk_model", dk_model_name(s.dk_model)},
      {"ks", cm ? s.ks * units::kKsSiToCgs : s.ks},
      {"rho_s", s.rho_s},
  };
}

Substrate substrate_from_json(const json& j) {
  check_schema(j, "Substrate");
  const bool cm = units_of(j) == JsonUnits::kCm;
  return Substrate(
      get_num(j, "cz") * (cm ? units::kCzCgsToSi : 1.0),
      get_num(j, "dk_small") * (cm ? units::kNPerCmToNPerM : 1.0),
      get_num(j, "dk_large") * (cm ? units::kNPerCmToNPerM : 1.0),
      get_num(j, "a_small") * (cm ? units::kCm2ToM2 : 1.0),
      get_num(j, "a_large") * (cm ? units::kCm2ToM2 : 1.0),
      dk_model_from(j.value("dk_model", "constant")),
      get_num(j, "ks") * (cm ? units::kKsCgsToSi : 1.0),
      get_num(j, "rho_s"));
}

json to_json(const TailGeometry& t, JsonUnits units) {
  const bool cm = units == JsonUnits::kCm;
  return json{
      {"schema_version", 1},
      {"units", cm ? "cm" : "si"},
      {"area", cm ? t.area * units::kM2ToCm2 : t.area},
      {"height", cm ? t.height * units::kMToCm : t.height},
      {"label", t.label},
  };
}

TailGeometry tail_geometry_from_json(const json& j) {
  check_schema(j, "TailGeometry");
  const bool cm = units_of(j) == JsonUnits::kCm;
  return TailGeometry(get_num(j, "area") * (cm ? units::kCm2ToM2 : 1.0),
                      get_num(j, "height") * (cm ? units::kCmToM : 1.0),
                      j.value("label", std::string{}));
}

json to_json(const BodyProfile& p, JsonUnits units) {
  const bool cm = units == JsonUnits::kCm;
  const double f = cm ? units::kMToCm : 1.0;
  json knots = json::array();
  for (const auto& k : p.knots)
    knots.push_back(json::array({k.depth * f, k.width * f}));
  return json{{"schema_version", 1},
              {"units", cm ? "cm" : "si"},
              {"knots", std::move(knots)}};
}

BodyProfile body_profile_from_json(const json& j) {
  check_schema(j, "BodyProfile");
  const bool cm = units_of(j) == JsonUnits::kCm;
  const double f = cm ? units::kCmToM : 1.0;
  if (!j.contains("knots") || !j.at("knots").is_array())
    throw ParseError("missing field 'knots'");
  std::vector<BodyProfile::Knot> knots;
  for (const auto& k : j.at("knots")) {
    if (!k.is_array() || k.size() != 2)
      throw ParseError("each knot must be [depth, width]");
    knots.push_back({k.at(0).get<double>() * f, k.at(1).get<double>() * f});
  }
  return BodyProfile(std::move(knots));
}

json to_json(const RobotParams& r, JsonUnits units) {
  const bool cm = units == JsonUnits::kCm;
  const double f = cm ? units::kMToCm : 1.0;
  return json{
      {"schema_version", 1},
      {"units", cm ? "cm" : "si"},
      {"mass_kg", r.mass},
      {"gravity", r.gravity},
      {"body_length", r.body_length * f},
      {"flipper_speed_rpm", r.flipper_speed},
      {"flipper_length", r.flipper_length * f},
      {"flipper_width", r.flipper_width * f},
      {"rear_load_fraction", r.rear_load_fraction},
  };
}

RobotParams robot_params_from_json(const json& j) {
  check_schema(j, "RobotParams");
  const bool cm = units_of(j) == JsonUnits::kCm;
  const double f = cm ? units::kCmToM : 1.0;
  return RobotParams(get_num(j, "mass_kg"), get_num(j, "body_length") * f,
                     get_num(j, "flipper_speed_rpm"),
                     get_num(j, "flipper_length") * f,
                     get_num(j, "flipper_width") * f,
                     j.value("rear_load_fraction", 0.5),
                     j.value("gravity", 9.81));
}

json to_json(const TailMode& m) {
  if (!m.oscillating()) return json{{"mode", "idle"}};
  return json{{"mode", "oscillate"},
              {"freq_hz", m.freq_hz},
              {"amplitude_deg", m.amplitude_deg}};
}

TailMode tail_mode_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mode"))
    throw ParseError("TailMode: missing field 'mode'");
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "idle") return TailMode::idle();
  if (mode == "oscillate")
    return TailMode::oscillate(j.value("freq_hz", 5.0),
                               j.value("amplitude_deg", 60.0));
  throw ParseError("TailMode: unknown mode '" + mode + "'");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace terratail
