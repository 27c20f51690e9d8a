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

#ifndef TERRATAIL_REPORT_HPP_
#define TERRATAIL_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "terratail/codesign.hpp"
#include "terratail/gait.hpp"
#include "terratail/types.hpp"

namespace terratail {

// Table and figure assembly shared by the CLI subcommands. Everything here
// emits cm-based columns (the units the experiments report) and byte-stable
// text: fixed shortest round-trip decimals and a metadata comment line
// carrying the tool version and an input digest.

std::string metadata_line(std::string_view input_digest_source);

struct CodesignReport {
  std::vector<CodesignRow> rows;
  std::optional<double> crossover_area;  // m^2, when a crossover is in range
  bool monotone_warning = false;
  std::string csv;
  std::string svg;  // R versus A with the R = 1 line and action bands
};

CodesignReport make_codesign_report(const Substrate& substrate,
                                    const std::vector<double>& areas,
                                    const BodyProfile& body,
                                    const RobotParams& robot, double epsilon,
                                    bool parallel,
                                    std::string_view input_digest_source);

enum class PredictKind { kSinkage, kDrag, kRatio };

struct PredictReport {
  std::string csv;
  std::string svg;
};

// One row per (tail, mode): stiffness, sinkage, drag and ratio where
// applicable. Rows that hit a model-domain error carry the message in an
// error column instead of aborting.
PredictReport make_predict_report(PredictKind kind, const Substrate& substrate,
                                  const std::vector<TailGeometry>& tails,
                                  const BodyProfile& body,
                                  const RobotParams& robot,
                                  std::string_view input_digest_source);

struct SimulateReport {
  std::vector<StepRecord> trajectory;
  std::string csv;
  std::string svg;  // rear depth and pitch versus step
};

SimulateReport make_simulate_report(const RobotParams& robot,
                                    const Substrate& substrate,
                                    const TailGeometry& tail,
                                    const TailMode& mode,
                                    const BodyProfile& body, int n_steps,
                                    const GaitConfig& config,
                                    std::string_view input_digest_source);

}  // namespace terratail

#endif  // TERRATAIL_REPORT_HPP_
