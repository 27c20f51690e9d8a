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

#include "terratail/types.hpp"

#include <cmath>

namespace terratail {

namespace {

void require(bool ok, const char* type, const char* field, const char* what) {
  if (!ok) throw ValidationError(type, field, what);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

Substrate::Substrate(double cz, double dk_small, double dk_large,
                     double a_small, double a_large, DkModel dk_model,
                     double ks, double rho_s)
    : cz(cz),
      dk_small(dk_small),
      dk_large(dk_large),
      a_small(a_small),
      a_large(a_large),
      dk_model(dk_model),
      ks(ks),
      rho_s(rho_s) {
  require(finite_positive(cz), "Substrate", "cz", "must be > 0");
  require(std::isfinite(dk_small) && dk_small >= 0.0, "Substrate", "dk_small",
          "must be >= 0");
  require(std::isfinite(dk_large) && dk_large >= 0.0, "Substrate", "dk_large",
          "must be >= 0");
  require(finite_positive(a_small), "Substrate", "a_small", "must be > 0");
  require(finite_positive(a_large), "Substrate", "a_large", "must be > 0");
  require(a_small < a_large, "Substrate", "a_small", "must be < a_large");
  require(finite_positive(ks), "Substrate", "ks", "must be > 0");
  require(std::isfinite(rho_s) && rho_s > 0.0 && rho_s <= 1.0, "Substrate",
          "rho_s", "must be in (0, 1]");
}

TailGeometry::TailGeometry(double area, double height, std::string label)
    : area(area), height(height), label(std::move(label)) {
  require(finite_positive(area), "TailGeometry", "area", "must be > 0");
  require(finite_positive(height), "TailGeometry", "height", "must be > 0");
}

BodyProfile::BodyProfile(std::vector<Knot> k) : knots(std::move(k)) {
  require(knots.size() >= 2, "BodyProfile", "knots", "need at least 2 knots");
  require(knots.front().depth == 0.0, "BodyProfile", "knots",
          "first depth must be 0");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    require(std::isfinite(knots[i].depth) && std::isfinite(knots[i].width),
            "BodyProfile", "knots", "non-finite knot");
    require(knots[i].width >= 0.0, "BodyProfile", "knots",
            "widths must be >= 0");
    if (i > 0)
      require(knots[i].depth > knots[i - 1].depth, "BodyProfile", "knots",
              "depths must be strictly increasing");
  }
}

BodyProfile BodyProfile::constant_width(double width, double max_depth) {
  return BodyProfile({{0.0, width}, {max_depth, width}});
}

double BodyProfile::width_at(double z) const {
  if (z < 0.0 || z > max_depth())
    throw DepthOutOfProfile("depth outside profile range");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (z <= knots[i].depth) {
      const Knot& a = knots[i - 1];
      const Knot& b = knots[i];
      const double t = (z - a.depth) / (b.depth - a.depth);
      return a.width + t * (b.width - a.width);
    }
  }
  return knots.back().width;  // z == max_depth within rounding
}

TailMode TailMode::oscillate(double freq_hz, double amplitude_deg) {
  if (!(std::isfinite(freq_hz) && freq_hz > 0.0))
    throw ValidationError("TailMode", "freq", "must be > 0");
  if (!(std::isfinite(amplitude_deg) && amplitude_deg > 0.0 &&
        amplitude_deg <= 180.0))
    throw ValidationError("TailMode", "amplitude", "must be in (0, 180]");
  return TailMode{Kind::kOscillate, freq_hz, amplitude_deg};
}

RobotParams::RobotParams(double mass, double body_length, double flipper_speed,
                         double flipper_length, double flipper_width,
                         double rear_load_fraction, double gravity)
    : mass(mass),
      gravity(gravity),
      body_length(body_length),
      flipper_speed(flipper_speed),
      flipper_length(flipper_length),
      flipper_width(flipper_width),
      rear_load_fraction(rear_load_fraction) {
  require(finite_positive(mass), "RobotParams", "mass", "must be > 0");
  require(finite_positive(gravity), "RobotParams", "gravity", "must be > 0");
  require(finite_positive(body_length), "RobotParams", "body_length",
          "must be > 0");
  require(finite_positive(flipper_speed), "RobotParams", "flipper_speed",
          "must be > 0");
  require(finite_positive(flipper_length), "RobotParams", "flipper_length",
          "must be > 0");
  require(finite_positive(flipper_width), "RobotParams", "flipper_width",
          "must be > 0");
  require(std::isfinite(rear_load_fraction) && rear_load_fraction > 0.0 &&
              rear_load_fraction < 1.0,
          "RobotParams", "rear_load_fraction", "must be in (0, 1)");
}

ForceTrace::ForceTrace(Kind kind, std::vector<Sample> s)
    : kind(kind), samples(std::move(s)) {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    require(samples[i].time > samples[i - 1].time, "ForceTrace", "samples",
            "time must be strictly increasing");
  }
}

MocapTrace::MocapTrace(std::vector<Sample> s) : samples(std::move(s)) {
  require(samples.size() >= 2, "MocapTrace", "samples",
          "need at least 2 samples");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    require(samples[i].time > samples[i - 1].time, "MocapTrace", "samples",
            "time must be strictly increasing");
  }
}

const char* to_string(Action a) {
  switch (a) {
    case Action::kIdle:
      return "idle";
    case Action::kOscillate:
      return "oscillate";
    case Action::kIndifferent:
      return "indifferent";
  }
  return "?";
}

}  // namespace terratail
