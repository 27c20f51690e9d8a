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

#ifndef TERRATAIL_TYPES_HPP_
#define TERRATAIL_TYPES_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "terratail/errors.hpp"

namespace terratail {

// How the fluidization stiffness reduction dk(A) is evaluated between and
// beyond the two calibrated areas.
enum class DkModel {
  kConstant,      // mean of dk_small and dk_large, area-independent
  kLinearInArea,  // linear through the two calibration points, clamped at 0
};

// Calibrated granular-terrain parameters. All values strict SI.
//
// cz is the penetration-stiffness density: the penetration resistance k_z of
// an intruder scales linearly with its support area, k_z = cz * A. Vibration
// of the tail fluidizes the bed locally, lowering k_z by dk and the shear
// strength by the factor rho_s.
struct Substrate {
  double cz;        // N/m per m^2 (N/m^3)
  double dk_small;  // N/m, reduction measured at area a_small
  double dk_large;  // N/m, reduction measured at area a_large
  double a_small;   // m^2
  double a_large;   // m^2
  DkModel dk_model;
  double ks;     // N/m^3, quiescent shear-stress coefficient
  double rho_s;  // fluidized/quiescent shear ratio, in (0, 1]

  Substrate(double cz, double dk_small, double dk_large, double a_small,
            double a_large, DkModel dk_model, double ks, double rho_s);

  bool operator==(const Substrate&) const = default;
};

// A tail intruder: projected support area perpendicular to penetration.
struct TailGeometry {
  double area;    // m^2
  double height;  // m
  std::string label;

  TailGeometry(double area, double height, std::string label = {});

  bool operator==(const TailGeometry&) const = default;
};

// Piecewise-linear width-versus-depth profile of the submerged body
// cross-section facing the shear direction.
struct BodyProfile {
  struct Knot {
    double depth;  // m
    double width;  // m
    bool operator==(const Knot&) const = default;
  };

  std::vector<Knot> knots;  // depths strictly increasing, starting at 0

  explicit BodyProfile(std::vector<Knot> knots);

  // Rectangle of constant width down to max_depth.
  static BodyProfile constant_width(double width, double max_depth);

  double max_depth() const { return knots.back().depth; }

  // Linear interpolation between knots; z must be in [0, max_depth].
  double width_at(double z) const;

  bool operator==(const BodyProfile&) const = default;
};

// Tail action: stationary, or horizontal oscillation at (freq, amplitude).
struct TailMode {
  enum class Kind { kIdle, kOscillate };

  Kind kind;
  double freq_hz;        // meaningful only when oscillating
  double amplitude_deg;  // meaningful only when oscillating

  static TailMode idle() { return TailMode{Kind::kIdle, 0.0, 0.0}; }
  static TailMode oscillate(double freq_hz, double amplitude_deg);
  // The experimental defaults: 5 Hz, 60 degrees.
  static TailMode oscillate_default() { return oscillate(5.0, 60.0); }

  bool oscillating() const { return kind == Kind::kOscillate; }

  bool operator==(const TailMode&) const = default;
};

struct RobotParams {
  double mass;                // kg; no default, must come from the user
  double gravity;             // m/s^2
  double body_length;         // m, pitch lever arm
  double flipper_speed;       // RPM
  double flipper_length;      // m
  double flipper_width;       // m
  double rear_load_fraction;  // fraction of weight carried by the rear, (0,1)

  RobotParams(double mass, double body_length, double flipper_speed,
              double flipper_length, double flipper_width,
              double rear_load_fraction = 0.5, double gravity = 9.81);

  // Static load the tail must support.
  double rear_weight() const { return rear_load_fraction * mass * gravity; }

  bool operator==(const RobotParams&) const = default;
};

// One experimental force-versus-position time series.
struct ForceTrace {
  enum class Kind { kPenetration, kShear };

  struct Sample {
    double time;      // s
    double position;  // m; depth for penetration, shear displacement for shear
    double force;     // N
    bool operator==(const Sample&) const = default;
  };

  Kind kind;
  std::vector<Sample> samples;  // time strictly increasing

  ForceTrace(Kind kind, std::vector<Sample> samples);

  bool operator==(const ForceTrace&) const = default;
};

// Motion-capture pose time series.
struct MocapTrace {
  struct Sample {
    double time;       // s
    double x, y, z;    // m, world frame (x fore-aft, y lateral, z vertical)
    double pitch_deg;
    std::optional<double> tail_z;  // m
    bool operator==(const Sample&) const = default;
  };

  std::vector<Sample> samples;  // time strictly increasing, >= 2

  explicit MocapTrace(std::vector<Sample> samples);

  bool operator==(const MocapTrace&) const = default;
};

// Recommended tail action for one design point.
enum class Action { kIdle, kOscillate, kIndifferent };

const char* to_string(Action a);

// One row of the morphology x motion sweep.
struct CodesignRow {
  double area;       // m^2
  double sink_idle;  // m
  double sink_osc;   // m
  double drag_idle;  // N
  double drag_osc;   // N
  double ratio;      // drag_osc / drag_idle
  Action recommendation;
  bool yielded = false;   // oscillating stiffness was <= 0 at this area
  std::string note;       // diagnostic, empty on clean rows

  bool operator==(const CodesignRow&) const = default;
};

}  // namespace terratail

#endif  // TERRATAIL_TYPES_HPP_
