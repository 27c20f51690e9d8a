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

#ifndef TERRATAIL_GAIT_HPP_
#define TERRATAIL_GAIT_HPP_

#include <vector>

#include "terratail/types.hpp"

namespace terratail {

// Quasi-static per-step locomotion model. Each flipper cycle sees a fresh,
// prepared bed (no substrate memory), so the physics fields are identical
// from step 1 on; the value of simulate() is the trajectory shape and the
// per-mode comparison, not dynamics.

struct GaitConfig {
  // Flipper-side insertion depth, m. The experiments do not quantify it, so
  // the default is 0; mocap-calibrated values can be injected here.
  double front_depth = 0.0;
  // Cap on flipper thrust, N, used only by the surrogate speed estimate.
  double thrust_cap = 5.0;
};

struct StepRecord {
  int step = 0;
  double d_rear = 0.0;     // m
  double d_front = 0.0;    // m
  double pitch_deg = 0.0;  // positive = nose up (rear deeper)
  double drag = 0.0;       // N, body drag at rear depth
  double speed = 0.0;      // m/s, surrogate ranking estimate only
  bool stuck = false;      // substrate yielded under the oscillating tail
};

// Body pitch from the front/rear depth difference over the body length.
// Positive when the rear is deeper (nose-up tilt). Odd in (d_rear - d_front).
double pitch_from_sinkage(double d_front, double d_rear, double body_length);

// Surrogate forward speed: v_kin * max(0, 1 - drag / thrust_cap). A
// qualitative ranking device only; never used in codesign recommendations.
double estimate_speed(double kinematic_speed, double drag, double thrust_cap);

// Flipper rim speed from the rotation rate and flipper length.
double kinematic_speed(const RobotParams& robot);

// One flipper cycle: rear sinkage, front depth, pitch, body drag, surrogate
// speed. A yielding substrate flags the record stuck instead of throwing.
StepRecord step(int step_index, const RobotParams& robot,
                const Substrate& substrate, const TailGeometry& tail,
                const TailMode& mode, const BodyProfile& body,
                const GaitConfig& config = {});

// n_steps >= 1 records; deterministic, O(n_steps).
std::vector<StepRecord> simulate(const RobotParams& robot,
                                 const Substrate& substrate,
                                 const TailGeometry& tail, const TailMode& mode,
                                 const BodyProfile& body, int n_steps,
                                 const GaitConfig& config = {});

}  // namespace terratail

#endif  // TERRATAIL_GAIT_HPP_
