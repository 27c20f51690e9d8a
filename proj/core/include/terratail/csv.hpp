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

#ifndef TERRATAIL_CSV_HPP_
#define TERRATAIL_CSV_HPP_

#include <iosfwd>
#include <string>

#include "terratail/types.hpp"

namespace terratail {

// Trace file schemas. Comma-separated, '.' decimal, UTF-8; lines starting
// with '#' are ignored. Positions are cm in the files and converted to SI
// on ingest.
//
//   penetration: time_s,depth_cm,force_N
//   shear:       time_s,disp_cm,force_N
//   mocap:       time_s,x_cm,y_cm,z_cm,pitch_deg[,tail_z_cm]
//
// Parse failures throw ParseError carrying the 1-based line number and the
// offending column name.

ForceTrace read_force_trace(std::istream& in, ForceTrace::Kind kind);
ForceTrace read_force_trace_file(const std::string& path,
                                 ForceTrace::Kind kind);

MocapTrace read_mocap_trace(std::istream& in);
MocapTrace read_mocap_trace_file(const std::string& path);

}  // namespace terratail

#endif  // TERRATAIL_CSV_HPP_
