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

#include "terratail/codesign.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "terratail/penetration.hpp"
#include "terratail/shear.hpp"

namespace terratail {

namespace {

constexpr double kTailHeight = 0.04;  // m, fixed across all tail designs
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

CodesignRow evaluate_row(const Substrate& substrate, double area,
                         const BodyProfile& body, const RobotParams& robot,
                         double epsilon) {
  CodesignRow row{};
  row.area = area;
  const TailGeometry tail(area, kTailHeight);
  const TailMode idle = TailMode::idle();
  const TailMode osc = TailMode::oscillate_default();

  try {
    row.sink_idle = sinkage_for(substrate, tail, idle, robot);
    row.drag_idle = drag_force(substrate, idle, body, row.sink_idle);
    row.sink_osc = sinkage_for(substrate, tail, osc, robot);
    row.drag_osc = drag_force(substrate, osc, body, row.sink_osc);
    if (row.drag_idle <= 0.0)
      throw DegenerateDrag("idle body drag is zero; ratio undefined");
    row.ratio = row.drag_osc / row.drag_idle;
    row.recommendation = recommend(row.ratio, epsilon);
  } catch (const SubstrateYield& e) {
    // An oscillating tail the substrate cannot support is strictly worse.
    row.sink_osc = kNan;
    row.drag_osc = kNan;
    row.ratio = kNan;
    row.yielded = true;
    row.recommendation = Action::kIdle;
    row.note = std::string("substrate yield: ") + e.what();
  } catch (const ModelError& e) {
    row.ratio = kNan;
    row.recommendation = Action::kIndifferent;
    row.note = e.what();
  }
  return row;
}

}  // namespace

Action recommend(double ratio, double epsilon) {
  if (!(ratio >= 0.0)) throw std::invalid_argument("ratio must be >= 0");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (ratio > 1.0 + epsilon) return Action::kIdle;
  if (ratio < 1.0 - epsilon) return Action::kOscillate;
  return Action::kIndifferent;
}

std::vector<CodesignRow> sweep(const Substrate& substrate,
                               const std::vector<double>& areas,
                               const BodyProfile& body,
                               const RobotParams& robot, double epsilon,
                               bool parallel) {
  if (areas.empty()) throw std::invalid_argument("areas must be nonempty");
  for (double a : areas)
    if (!(a > 0.0)) throw std::invalid_argument("areas must be > 0");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");

  std::vector<CodesignRow> rows(areas.size());
  if (!parallel || areas.size() < 2) {
    for (std::size_t i = 0; i < areas.size(); ++i)
      rows[i] = evaluate_row(substrate, areas[i], body, robot, epsilon);
    return rows;
  }

  const unsigned n_threads =
      std::min<unsigned>(std::thread::hardware_concurrency() > 0
                             ? std::thread::hardware_concurrency()
                             : 2,
                         static_cast<unsigned>(areas.size()));
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < areas.size(); i += n_threads)
        rows[i] = evaluate_row(substrate, areas[i], body, robot, epsilon);
    });
  }
  for (auto& w : workers) w.join();
  return rows;
}

CrossoverResult crossover_area(const Substrate& substrate,
                               const BodyProfile& body,
                               const RobotParams& robot,
                               std::pair<double, double> bracket, double tol) {
  double lo = bracket.first;
  double hi = bracket.second;
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("invalid bracket");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");

  const auto ratio_at = [&](double area) {
    return drag_ratio(substrate, TailGeometry(area, kTailHeight), body, robot);
  };

  double r_lo, r_hi;
  try {
    r_lo = ratio_at(lo);
    r_hi = ratio_at(hi);
  } catch (const SubstrateYield&) {
    throw NoCrossover("oscillating stiffness non-positive inside bracket");
  }
  if (!(r_lo > 1.0 && r_hi < 1.0))
    throw NoCrossover("bracket does not straddle R = 1");

  // Monotonicity spot check across the bracket.
  CrossoverResult result{};
  {
    constexpr int kProbes = 8;
    double prev = r_lo;
    for (int i = 1; i <= kProbes; ++i) {
      const double a = lo + (hi - lo) * i / (kProbes + 1.0);
      const double r = ratio_at(a);
      if (r > prev) result.monotone_warning = true;
      prev = r;
    }
  }

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (ratio_at(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  result.area = 0.5 * (lo + hi);
  return result;
}

}  // namespace terratail
