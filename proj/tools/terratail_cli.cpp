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

// terratail: calibrate terrain parameters from force/motion traces, predict
// sinkage and drag, sweep tail designs, and run the quasi-static gait model.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "terratail/calibration.hpp"
#include "terratail/codesign.hpp"
#include "terratail/csv.hpp"
#include "terratail/format.hpp"
#include "terratail/gait.hpp"
#include "terratail/json_io.hpp"
#include "terratail/report.hpp"
#include "terratail/units.hpp"

namespace tt = terratail;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitModel = 3;
constexpr int kExitInternal = 4;

struct CliError {
  int code;
  std::string kind;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& kind,
                       const std::string& message) {
  throw CliError{code, kind, message};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kExitInput, "io", "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(kExitInternal, "io", "cannot write file: " + path.string());
  out << content;
}

// "lo:hi" in cm -> (m, m)
std::pair<double, double> parse_window_cm(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    fail(kExitInput, "flag", "window must be lo:hi (cm): " + text);
  try {
    const double lo = std::stod(text.substr(0, colon));
    const double hi = std::stod(text.substr(colon + 1));
    return {lo * tt::units::kCmToM, hi * tt::units::kCmToM};
  } catch (const std::exception&) {
    fail(kExitInput, "flag", "bad window value: " + text);
  }
}

// "start:stop:step" in cm^2 -> list of m^2
std::vector<double> parse_area_range(const std::string& text) {
  double start{}, stop{}, step{};
  char c1{}, c2{};
  std::istringstream ss(text);
  if (!(ss >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
      step <= 0.0 || stop < start)
    fail(kExitInput, "flag", "area range must be start:stop:step (cm^2): " + text);
  std::vector<double> areas;
  for (double a = start; a <= stop + 1e-12; a += step)
    areas.push_back(a * tt::units::kCm2ToM2);
  if (areas.empty()) fail(kExitInput, "flag", "empty area range: " + text);
  return areas;
}

std::vector<double> parse_area_list(const std::string& text) {
  std::vector<double> areas;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      areas.push_back(std::stod(tok) * tt::units::kCm2ToM2);
    } catch (const std::exception&) {
      fail(kExitInput, "flag", "bad area: " + tok);
    }
  }
  if (areas.empty()) fail(kExitInput, "flag", "no areas given");
  return areas;
}

tt::Substrate load_substrate(const std::string& path) {
  return tt::substrate_from_json(tt::load_json_file(path));
}

tt::RobotParams load_robot(const std::string& path) {
  return tt::robot_params_from_json(tt::load_json_file(path));
}

tt::BodyProfile load_body(const std::string& path) {
  return tt::body_profile_from_json(tt::load_json_file(path));
}

// --- calibrate ------------------------------------------------------------

int cmd_calibrate_penetration(const std::string& input,
                              const std::string& input_osc,
                              const std::string& window_arg,
                              const std::string& out) {
  const auto window = window_arg.empty()
                          ? std::make_pair(tt::kDefaultFitDepthMin, 0.04)
                          : parse_window_cm(window_arg);
  const auto idle = tt::read_force_trace_file(input,
                                              tt::ForceTrace::Kind::kPenetration);
  json result;
  result["schema_version"] = 1;
  result["units"] = "cm";
  const auto fit = tt::fit_penetration(idle, window);
  result["k_z"] = fit.k_z * tt::units::kNPerMToNPerCm;
  result["residual_rms_N"] = fit.residual_rms;
  result["n_samples"] = fit.n_samples;
  result["intercept_N"] = fit.intercept_diag;
  if (fit.negative_slope) result["warning"] = "non-positive slope";
  if (!input_osc.empty()) {
    const auto osc = tt::read_force_trace_file(
        input_osc, tt::ForceTrace::Kind::kPenetration);
    const auto fluid = tt::fit_fluidization(idle, osc, window);
    result["k_z_osc"] = fluid.osc_fit.k_z * tt::units::kNPerMToNPerCm;
    result["dk"] = fluid.dk * tt::units::kNPerMToNPerCm;
    if (fluid.negative) result["warning"] = "negative dk";
  }
  if (out.empty())
    std::cout << result.dump(2) << "\n";
  else
    tt::write_json_file(out, result);
  return kExitOk;
}

int cmd_calibrate_shear(const std::string& idle_path,
                        const std::string& osc_path,
                        const std::string& window_arg,
                        const std::string& out) {
  const auto window = window_arg.empty() ? tt::kDefaultShearWindow
                                          : parse_window_cm(window_arg);
  const auto idle =
      tt::read_force_trace_file(idle_path, tt::ForceTrace::Kind::kShear);
  const double mean_idle = tt::mean_shear(idle, window);
  json result;
  result["schema_version"] = 1;
  result["mean_idle_N"] = mean_idle;
  if (!osc_path.empty()) {
    const auto osc =
        tt::read_force_trace_file(osc_path, tt::ForceTrace::Kind::kShear);
    const double mean_osc = tt::mean_shear(osc, window);
    const double reduction = tt::drag_reduction(mean_idle, mean_osc);
    result["mean_osc_N"] = mean_osc;
    result["reduction"] = reduction;
    result["rho_s"] = 1.0 - reduction;
  }
  if (out.empty())
    std::cout << result.dump(2) << "\n";
  else
    tt::write_json_file(out, result);
  return kExitOk;
}

int cmd_calibrate_speed(const std::string& input, const std::string& baseline,
                        const std::string& out) {
  const auto trace = tt::read_mocap_trace_file(input);
  const double v = tt::speed_from_mocap(trace);
  json result;
  result["schema_version"] = 1;
  result["v_x_cm_s"] = v * tt::units::kMToCm;
  if (!baseline.empty()) {
    const double v_idle =
        tt::speed_from_mocap(tt::read_mocap_trace_file(baseline));
    result["v_idle_cm_s"] = v_idle * tt::units::kMToCm;
    result["eta"] = tt::speed_improvement(v_idle, v);
  }
  if (out.empty())
    std::cout << result.dump(2) << "\n";
  else
    tt::write_json_file(out, result);
  return kExitOk;
}

// --- predict / codesign / simulate ---------------------------------------

int cmd_predict(const std::string& kind_name, const std::string& substrate_path,
                const std::string& robot_path, const std::string& body_path,
                const std::string& areas_arg, const std::string& out_dir) {
  tt::PredictKind kind;
  if (kind_name == "sinkage")
    kind = tt::PredictKind::kSinkage;
  else if (kind_name == "drag")
    kind = tt::PredictKind::kDrag;
  else if (kind_name == "ratio")
    kind = tt::PredictKind::kRatio;
  else
    fail(kExitInput, "flag", "predict kind must be sinkage|drag|ratio");

  const auto substrate = load_substrate(substrate_path);
  const auto robot = load_robot(robot_path);
  const auto body = load_body(body_path);
  std::vector<tt::TailGeometry> tails;
  for (double a : parse_area_list(areas_arg))
    tails.emplace_back(a, 0.04);

  const std::string digest =
      slurp(substrate_path) + slurp(robot_path) + slurp(body_path) + areas_arg;
  const auto report =
      tt::make_predict_report(kind, substrate, tails, body, robot, digest);

  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "predict.csv", report.csv);
  write_file(fs::path(out_dir) / "predict.svg", report.svg);
  std::cout << "wrote " << (fs::path(out_dir) / "predict.csv").string() << "\n";
  return kExitOk;
}

int cmd_codesign(const std::string& substrate_path,
                 const std::string& robot_path, const std::string& body_path,
                 const std::string& range_arg, double epsilon, bool parallel,
                 const std::string& out_dir) {
  if (!(epsilon >= 0.0)) fail(kExitInput, "flag", "epsilon must be >= 0");
  const auto substrate = load_substrate(substrate_path);
  const auto robot = load_robot(robot_path);
  const auto body = load_body(body_path);
  const auto areas = parse_area_range(range_arg);

  const std::string digest = slurp(substrate_path) + slurp(robot_path) +
                             slurp(body_path) + range_arg +
                             tt::format_double(epsilon);
  const auto report = tt::make_codesign_report(substrate, areas, body, robot,
                                               epsilon, parallel, digest);

  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "map.csv", report.csv);
  write_file(fs::path(out_dir) / "map.svg", report.svg);
  if (report.crossover_area) {
    std::cout << "crossover area A* = "
              << tt::format_double(*report.crossover_area *
                                   tt::units::kM2ToCm2)
              << " cm^2\n";
    if (report.monotone_warning)
      std::cout << "warning: sampled R(A) not monotone on the bracket\n";
  } else {
    std::cout << "no crossover in range\n";
  }
  std::cout << "wrote " << (fs::path(out_dir) / "map.csv").string() << "\n";
  return kExitOk;
}

int cmd_simulate(const std::string& substrate_path,
                 const std::string& robot_path, const std::string& body_path,
                 double tail_area_cm2, const std::string& mode_name,
                 int n_steps, double front_depth_cm, double thrust_cap,
                 const std::string& out_dir) {
  const auto substrate = load_substrate(substrate_path);
  const auto robot = load_robot(robot_path);
  const auto body = load_body(body_path);
  if (!(tail_area_cm2 > 0.0))
    fail(kExitInput, "flag", "tail area must be > 0");
  const tt::TailGeometry tail(tail_area_cm2 * tt::units::kCm2ToM2, 0.04);
  tt::TailMode mode = tt::TailMode::idle();
  if (mode_name == "oscillate")
    mode = tt::TailMode::oscillate_default();
  else if (mode_name != "idle")
    fail(kExitInput, "flag", "mode must be idle|oscillate");

  tt::GaitConfig config;
  config.front_depth = front_depth_cm * tt::units::kCmToM;
  if (thrust_cap > 0.0) config.thrust_cap = thrust_cap;

  const std::string digest = slurp(substrate_path) + slurp(robot_path) +
                             slurp(body_path) +
                             tt::format_double(tail_area_cm2) + mode_name;
  const auto report = tt::make_simulate_report(robot, substrate, tail, mode,
                                               body, n_steps, config, digest);

  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "trajectory.csv", report.csv);
  write_file(fs::path(out_dir) / "traj.svg", report.svg);
  std::cout << "wrote " << (fs::path(out_dir) / "trajectory.csv").string()
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tail-terrain interaction model: calibration, prediction, "
               "co-design sweeps, and quasi-static gait simulation"};
  app.require_subcommand(1);

  // calibrate
  auto* calibrate = app.add_subcommand("calibrate", "fit terrain parameters "
                                                    "from experimental traces");
  calibrate->require_subcommand(1);

  std::string pen_input, pen_input_osc, pen_window, pen_out;
  auto* cal_pen = calibrate->add_subcommand(
      "penetration", "fit penetration resistance k_z from a force-depth trace");
  cal_pen->add_option("--input", pen_input, "penetration trace CSV")
      ->required();
  cal_pen->add_option("--input-osc", pen_input_osc,
                      "oscillating-tail trace CSV (adds dk)");
  cal_pen->add_option("--window-cm", pen_window, "depth fit window lo:hi, cm");
  cal_pen->add_option("--out", pen_out, "output JSON path (default stdout)");

  std::string shear_idle, shear_osc, shear_window, shear_out;
  auto* cal_shear = calibrate->add_subcommand(
      "shear", "average shear drag and fluidization ratio from drag traces");
  cal_shear->add_option("--idle", shear_idle, "idle-tail shear trace CSV")
      ->required();
  cal_shear->add_option("--osc", shear_osc, "oscillating-tail shear trace CSV");
  cal_shear->add_option("--window-cm", shear_window,
                        "displacement window lo:hi, cm (default 2.5:17.5)");
  cal_shear->add_option("--out", shear_out, "output JSON path");

  std::string speed_input, speed_baseline, speed_out;
  auto* cal_speed = calibrate->add_subcommand(
      "speed", "average forward speed from a mocap trace");
  cal_speed->add_option("--input", speed_input, "mocap trace CSV")->required();
  cal_speed->add_option("--baseline", speed_baseline,
                        "idle-tail mocap CSV (adds improvement eta)");
  cal_speed->add_option("--out", speed_out, "output JSON path");

  // predict
  std::string pred_kind, pred_substrate, pred_robot, pred_body, pred_areas,
      pred_out_dir = ".";
  auto* predict = app.add_subcommand(
      "predict", "predict sinkage, drag, or drag ratio per tail and mode");
  predict->add_option("kind", pred_kind, "sinkage|drag|ratio")->required();
  predict->add_option("--substrate", pred_substrate, "Substrate JSON")
      ->required();
  predict->add_option("--robot", pred_robot, "RobotParams JSON")->required();
  predict->add_option("--body", pred_body, "BodyProfile JSON")->required();
  predict->add_option("--areas", pred_areas, "tail areas, cm^2, comma list")
      ->required();
  predict->add_option("--out-dir", pred_out_dir, "output directory");

  // codesign
  std::string cd_substrate, cd_robot, cd_body, cd_range, cd_out_dir = ".";
  double cd_epsilon = tt::kDefaultEpsilon;
  bool cd_parallel = false;
  auto* codesign = app.add_subcommand(
      "codesign", "sweep tail area, map the drag ratio, find the crossover");
  codesign->add_option("--substrate", cd_substrate, "Substrate JSON")
      ->required();
  codesign->add_option("--robot", cd_robot, "RobotParams JSON")->required();
  codesign->add_option("--body", cd_body, "BodyProfile JSON")->required();
  codesign->add_option("--areas", cd_range, "area range start:stop:step, cm^2")
      ->required();
  codesign->add_option("--epsilon", cd_epsilon,
                       "indifference dead band around R = 1");
  codesign->add_flag("--parallel", cd_parallel, "evaluate rows on threads");
  codesign->add_option("--out-dir", cd_out_dir, "output directory");

  // simulate
  std::string sim_substrate, sim_robot, sim_body, sim_mode = "idle",
              sim_out_dir = ".";
  double sim_area = 16.0, sim_front_depth = 0.0, sim_thrust = 0.0;
  int sim_steps = 10;
  auto* simulate = app.add_subcommand(
      "simulate", "quasi-static per-step gait model");
  simulate->add_option("--substrate", sim_substrate, "Substrate JSON")
      ->required();
  simulate->add_option("--robot", sim_robot, "RobotParams JSON")->required();
  simulate->add_option("--body", sim_body, "BodyProfile JSON")->required();
  simulate->add_option("--tail-area", sim_area, "tail area, cm^2");
  simulate->add_option("--mode", sim_mode, "idle|oscillate");
  simulate->add_option("--steps", sim_steps, "number of flipper cycles")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--front-depth", sim_front_depth,
                       "flipper-side depth, cm");
  simulate->add_option("--thrust-cap", sim_thrust,
                       "thrust cap for the surrogate speed, N");
  simulate->add_option("--out-dir", sim_out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cal_pen->parsed())
      return cmd_calibrate_penetration(pen_input, pen_input_osc, pen_window,
                                       pen_out);
    if (cal_shear->parsed())
      return cmd_calibrate_shear(shear_idle, shear_osc, shear_window,
                                 shear_out);
    if (cal_speed->parsed())
      return cmd_calibrate_speed(speed_input, speed_baseline, speed_out);
    if (predict->parsed())
      return cmd_predict(pred_kind, pred_substrate, pred_robot, pred_body,
                         pred_areas, pred_out_dir);
    if (codesign->parsed())
      return cmd_codesign(cd_substrate, cd_robot, cd_body, cd_range,
                          cd_epsilon, cd_parallel, cd_out_dir);
    if (simulate->parsed())
      return cmd_simulate(sim_substrate, sim_robot, sim_body, sim_area,
                          sim_mode, sim_steps, sim_front_depth, sim_thrust,
                          sim_out_dir);
    return kExitInput;
  } catch (const CliError& e) {
    std::cerr << json{{"error", e.message}, {"kind", e.kind}}.dump() << "\n";
    return e.code;
  } catch (const tt::ParseError& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "parse"}}.dump() << "\n";
    return kExitInput;
  } catch (const tt::ValidationError& e) {
    std::cerr << json{{"error", e.what()},
                      {"kind", "validation"},
                      {"field", e.field()}}
                     .dump()
              << "\n";
    return kExitInput;
  } catch (const tt::ModelError& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "model"}}.dump() << "\n";
    return kExitModel;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "internal"}}.dump()
              << "\n";
    return kExitInternal;
  }
}
