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

#include "terratail/gait.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "terratail/penetration.hpp"
#include "terratail/shear.hpp"

namespace terratail {

double pitch_from_sinkage(double d_front, double d_rear, double body_length) {
  if (!(body_length > 0.0))
    throw std::invalid_argument("body_length must be > 0");
  if (!(d_front >= 0.0 && d_rear >= 0.0))
    throw std::invalid_argument("depths must be >= 0");
  return std::atan((d_rear - d_front) / body_length) * 180.0 /
         std::numbers::pi;
}

double estimate_speed(double kinematic_speed, double drag, double thrust_cap) {
  if (!(kinematic_speed >= 0.0 && drag >= 0.0))
    throw std::invalid_argument("inputs must be >= 0");
  if (!(thrust_cap > 0.0))
    throw std::invalid_argument("thrust_cap must be > 0");
  return kinematic_speed * std::max(0.0, 1.0 - drag / thrust_cap);
}

double kinematic_speed(const RobotParams& robot) {
  const double omega = robot.flipper_speed * 2.0 * std::numbers::pi / 60.0;
  return omega * robot.flipper_length;
}

StepRecord step(int step_index, const RobotParams& robot,
                const Substrate& substrate, const TailGeometry& tail,
                const TailMode& mode, const BodyProfile& body,
                const GaitConfig& config) {
  StepRecord rec{};
  rec.step = step_index;
  rec.d_front = config.front_depth;
  try {
    rec.d_rear = sinkage_for(substrate, tail, mode, robot);
    rec.pitch_deg =
        pitch_from_sinkage(rec.d_front, rec.d_rear, robot.body_length);
    rec.drag = drag_force(substrate, mode, body, rec.d_rear);
    rec.speed = estimate_speed(kinematic_speed(robot), rec.drag,
                               config.thrust_cap);
  } catch (const SubstrateYield&) {
    rec.stuck = true;
    rec.d_rear = tail.height;  // bottomed out against the tail itself
    rec.pitch_deg =
        pitch_from_sinkage(rec.d_front, rec.d_rear, robot.body_length);
    rec.drag = 0.0;
    rec.speed = 0.0;
  }
  return rec;
}

std::vector<StepRecord> simulate(const RobotParams& robot,
                                 const Substrate& substrate,
                                 const TailGeometry& tail, const TailMode& mode,
                                 const BodyProfile& body, int n_steps,
                                 const GaitConfig& config) {
  if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
  std::vector<StepRecord> trajectory;
  trajectory.reserve(static_cast<std::size_t>(n_steps));
  for (int i = 0; i < n_steps; ++i)
    trajectory.push_back(step(i + 1, robot, substrate, tail, mode, body, config));
  return trajectory;
}

}  // namespace terratail
