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

#include "terratail/report.hpp"

#include <cmath>
#include <sstream>

#include "terratail/format.hpp"
#include "terratail/penetration.hpp"
#include "terratail/shear.hpp"
#include "terratail/svg.hpp"
#include "terratail/units.hpp"

namespace terratail {

namespace {

std::string fd(double v) { return format_double(v); }

std::string cm(double meters) { return fd(meters * units::kMToCm); }
std::string cm2(double m2) { return fd(m2 * units::kM2ToCm2); }

}  // namespace

std::string metadata_line(std::string_view input_digest_source) {
  std::string line = "# terratail v";
  line += kToolVersion;
  line += " inputs=";
  line += hex64(fnv1a(input_digest_source));
  line += "\n";
  return line;
}

CodesignReport make_codesign_report(const Substrate& substrate,
                                    const std::vector<double>& areas,
                                    const BodyProfile& body,
                                    const RobotParams& robot, double epsilon,
                                    bool parallel,
                                    std::string_view input_digest_source) {
  CodesignReport report;
  report.rows = sweep(substrate, areas, body, robot, epsilon, parallel);

  // Crossover search, when the sampled ratios straddle R = 1.
  double lo = 0.0, hi = 0.0;
  bool have_lo = false, have_hi = false;
  for (const auto& row : report.rows) {
    if (std::isnan(row.ratio)) continue;
    if (row.ratio > 1.0 && (!have_lo || row.area > lo)) {
      // keep the largest area still above R = 1 for a tight bracket
      lo = row.area;
      have_lo = true;
    }
    if (row.ratio < 1.0 && (!have_hi || row.area < hi)) {
      hi = row.area;
      have_hi = true;
    }
  }
  if (have_lo && have_hi && hi > lo) {
    try {
      const auto result = crossover_area(substrate, body, robot, {lo, hi});
      report.crossover_area = result.area;
      report.monotone_warning = result.monotone_warning;
    } catch (const NoCrossover&) {
      // informational only
    }
  }

  std::ostringstream csv;
  csv << metadata_line(input_digest_source);
  csv << "area_cm2,sink_idle_cm,sink_osc_cm,drag_idle_N,drag_osc_N,ratio,"
         "recommendation,note\n";
  for (const auto& r : report.rows) {
    csv << cm2(r.area) << "," << cm(r.sink_idle) << ","
        << (std::isnan(r.sink_osc) ? "nan" : cm(r.sink_osc)) << ","
        << fd(r.drag_idle) << "," << fd(r.drag_osc) << "," << fd(r.ratio)
        << "," << to_string(r.recommendation) << "," << r.note << "\n";
  }
  report.csv = csv.str();

  SvgChart chart_builder("Body drag ratio vs tail area", "tail area (cm^2)",
                         "drag ratio R = f_osc / f_idle");
  std::vector<std::pair<double, double>> pts;
  double a_min = 0.0, a_max = 0.0;
  bool first = true;
  for (const auto& r : report.rows) {
    const double a = r.area * units::kM2ToCm2;
    if (first) {
      a_min = a_max = a;
      first = false;
    }
    a_min = std::min(a_min, a);
    a_max = std::max(a_max, a);
    pts.emplace_back(a, r.ratio);
  }
  chart_builder.set_x_range(a_min, a_max);
  if (report.crossover_area) {
    const double ac = *report.crossover_area * units::kM2ToCm2;
    chart_builder.add_band(a_min, ac, "#7bbf7b", "idle better");
    chart_builder.add_band(ac, a_max, "#e8a553", "oscillate better");
  }
  chart_builder.add_hline(1.0, "#cc3333");
  chart_builder.add_series("R(A)", std::move(pts), "#1f5fa8", true);
  report.svg = chart_builder.render();
  return report;
}

PredictReport make_predict_report(PredictKind kind, const Substrate& substrate,
                                  const std::vector<TailGeometry>& tails,
                                  const BodyProfile& body,
                                  const RobotParams& robot,
                                  std::string_view input_digest_source) {
  struct Row {
    double area;
    const char* mode;
    double kz = NAN, sink = NAN, drag = NAN, ratio = NAN;
    std::string error;
  };
  std::vector<Row> rows;
  for (const auto& tail : tails) {
    for (const TailMode mode : {TailMode::idle(), TailMode::oscillate_default()}) {
      Row row{tail.area, mode.oscillating() ? "oscillate" : "idle"};
      try {
        row.kz = penetration_stiffness(substrate, tail.area, mode);
        row.sink = sinkage_for(substrate, tail, mode, robot);
        if (kind != PredictKind::kSinkage)
          row.drag = drag_force(substrate, mode, body, row.sink);
        if (kind == PredictKind::kRatio && mode.oscillating())
          row.ratio = drag_ratio(substrate, tail, body, robot);
      } catch (const ModelError& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }

  std::ostringstream csv;
  csv << metadata_line(input_digest_source);
  csv << "area_cm2,mode,kz_N_per_cm,sink_cm,drag_N,ratio,error\n";
  for (const auto& r : rows) {
    csv << cm2(r.area) << "," << r.mode << ","
        << fd(r.kz * units::kNPerMToNPerCm) << "," << cm(r.sink) << ","
        << fd(r.drag) << "," << fd(r.ratio) << "," << r.error << "\n";
  }

  // Sinkage (or drag) versus area, idle and oscillating curves.
  SvgChart chart(kind == PredictKind::kSinkage
                     ? "Predicted tail sink depth"
                     : kind == PredictKind::kDrag ? "Predicted body drag"
                                                  : "Predicted drag ratio",
                 "tail area (cm^2)",
                 kind == PredictKind::kSinkage ? "sink depth (cm)"
                 : kind == PredictKind::kDrag  ? "drag (N)"
                                               : "ratio");
  std::vector<std::pair<double, double>> idle_pts, osc_pts;
  for (const auto& r : rows) {
    double y;
    switch (kind) {
      case PredictKind::kSinkage: y = r.sink * units::kMToCm; break;
      case PredictKind::kDrag: y = r.drag; break;
      case PredictKind::kRatio: y = r.ratio; break;
      default: y = NAN;
    }
    auto& dst = std::string(r.mode) == "idle" ? idle_pts : osc_pts;
    dst.emplace_back(r.area * units::kM2ToCm2, y);
  }
  if (kind == PredictKind::kRatio) {
    chart.add_hline(1.0, "#cc3333");
    chart.add_series("R(A)", std::move(osc_pts), "#1f5fa8", true);
  } else {
    chart.add_series("idle", std::move(idle_pts), "#2e8b57", true);
    chart.add_series("oscillate", std::move(osc_pts), "#e07b39", true);
  }

  return PredictReport{csv.str(), chart.render()};
}

SimulateReport make_simulate_report(const RobotParams& robot,
                                    const Substrate& substrate,
                                    const TailGeometry& tail,
                                    const TailMode& mode,
                                    const BodyProfile& body, int n_steps,
                                    const GaitConfig& config,
                                    std::string_view input_digest_source) {
  SimulateReport report;
  report.trajectory =
      simulate(robot, substrate, tail, mode, body, n_steps, config);

  std::ostringstream csv;
  csv << metadata_line(input_digest_source);
  csv << "step,d_rear_cm,d_front_cm,pitch_deg,drag_N,speed_cm_s,stuck\n";
  for (const auto& rec : report.trajectory) {
    csv << rec.step << "," << cm(rec.d_rear) << "," << cm(rec.d_front) << ","
        << fd(rec.pitch_deg) << "," << fd(rec.drag) << ","
        << cm(rec.speed) << "," << (rec.stuck ? 1 : 0) << "\n";
  }
  report.csv = csv.str();

  SvgChart chart("Quasi-static trajectory", "step", "value");
  std::vector<std::pair<double, double>> depth_pts, pitch_pts;
  for (const auto& rec : report.trajectory) {
    depth_pts.emplace_back(rec.step, rec.d_rear * units::kMToCm);
    pitch_pts.emplace_back(rec.step, rec.pitch_deg);
  }
  chart.add_series("rear depth (cm)", std::move(depth_pts), "#1f5fa8", true);
  chart.add_series("pitch (deg)", std::move(pitch_pts), "#e07b39", true);
  report.svg = chart.render();
  return report;
}

}  // namespace terratail
