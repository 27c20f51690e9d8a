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

#include "terratail/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "terratail/units.hpp"

namespace terratail {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim whitespace
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string()
                                         : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_field(const std::string& s, const char* column, long line_no) {
  double v{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw ParseError(std::string("bad value for column '") + column + "': '" +
                         s + "'",
                     line_no);
  return v;
}

// Reads the header, checks it starts with the expected columns, and returns
// the column count actually present.
std::size_t read_header(std::istream& in,
                        const std::vector<std::string>& required,
                        std::size_t max_cols, long& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split_csv(line);
    for (std::size_t i = 0; i < required.size(); ++i) {
      if (i >= cols.size() || cols[i] != required[i])
        throw ParseError("missing or misnamed column '" + required[i] + "'",
                         line_no);
    }
    if (cols.size() > max_cols)
      throw ParseError("unexpected extra columns", line_no);
    return cols.size();
  }
  throw ParseError("empty file: no header row found");
}

}  // namespace

ForceTrace read_force_trace(std::istream& in, ForceTrace::Kind kind) {
  const char* pos_col =
      kind == ForceTrace::Kind::kPenetration ? "depth_cm" : "disp_cm";
  long line_no = 0;
  read_header(in, {"time_s", pos_col, "force_N"}, 3, line_no);

  std::vector<ForceTrace::Sample> samples;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split_csv(line);
    if (cols.size() != 3) throw ParseError("expected 3 fields", line_no);
    ForceTrace::Sample s{};
    s.time = parse_field(cols[0], "time_s", line_no);
    s.position = parse_field(cols[1], pos_col, line_no) * units::kCmToM;
    s.force = parse_field(cols[2], "force_N", line_no);
    samples.push_back(s);
  }
  return ForceTrace(kind, std::move(samples));
}

ForceTrace read_force_trace_file(const std::string& path,
                                 ForceTrace::Kind kind) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return read_force_trace(in, kind);
}

MocapTrace read_mocap_trace(std::istream& in) {
  long line_no = 0;
  const std::size_t n_cols = read_header(
      in, {"time_s", "x_cm", "y_cm", "z_cm", "pitch_deg"}, 6, line_no);
  const bool has_tail_z = n_cols == 6;

  std::vector<MocapTrace::Sample> samples;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split_csv(line);
    if (cols.size() != n_cols)
      throw ParseError("expected " + std::to_string(n_cols) + " fields",
                       line_no);
    MocapTrace::Sample s{};
    s.time = parse_field(cols[0], "time_s", line_no);
    s.x = parse_field(cols[1], "x_cm", line_no) * units::kCmToM;
    s.y = parse_field(cols[2], "y_cm", line_no) * units::kCmToM;
    s.z = parse_field(cols[3], "z_cm", line_no) * units::kCmToM;
    s.pitch_deg = parse_field(cols[4], "pitch_deg", line_no);
    if (has_tail_z && !cols[5].empty())
      s.tail_z = parse_field(cols[5], "tail_z_cm", line_no) * units::kCmToM;
    samples.push_back(s);
  }
  return MocapTrace(std::move(samples));
}

MocapTrace read_mocap_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return read_mocap_trace(in);
}

}  // namespace terratail
