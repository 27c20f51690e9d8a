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

#include "terratail/shear.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "terratail/penetration.hpp"

namespace terratail {

double shear_stress(const Substrate& s, const TailMode& mode, double z) {
  if (!(z >= 0.0)) throw std::invalid_argument("z must be >= 0");
  const double ks_eff = mode.oscillating() ? s.rho_s * s.ks : s.ks;
  return ks_eff * z;
}

double drag_force(const Substrate& s, const TailMode& mode,
                  const BodyProfile& profile, double depth) {
  if (!(depth >= 0.0)) throw std::invalid_argument("depth must be >= 0");
  if (depth > profile.max_depth())
    throw DepthOutOfProfile("insertion depth exceeds profile range");

  const double ks_eff = mode.oscillating() ? s.rho_s * s.ks : s.ks;

  // Per segment, w(z) = c + m*z, so the integrand ks*z*w(z) has the
  // antiderivative ks*(c*z^2/2 + m*z^3/3).
  double total = 0.0;
  for (std::size_t i = 1; i < profile.knots.size(); ++i) {
    const auto& a = profile.knots[i - 1];
    const auto& b = profile.knots[i];
    const double z0 = a.depth;
    if (z0 >= depth) break;
    const double z1 = std::min(b.depth, depth);
    const double m = (b.width - a.width) / (b.depth - a.depth);
    const double c = a.width - m * a.depth;
    total += c * (z1 * z1 - z0 * z0) / 2.0 + m * (z1 * z1 * z1 - z0 * z0 * z0) / 3.0;
  }
  return ks_eff * total;
}

double drag_ratio(const Substrate& s, const TailGeometry& tail,
                  const BodyProfile& body, const RobotParams& robot) {
  const double d_idle = sinkage_for(s, tail, TailMode::idle(), robot);
  const double d_osc =
      sinkage_for(s, tail, TailMode::oscillate_default(), robot);
  const double f_idle = drag_force(s, TailMode::idle(), body, d_idle);
  if (f_idle <= 0.0)
    throw DegenerateDrag("idle body drag is zero; ratio undefined");
  const double f_osc =
      drag_force(s, TailMode::oscillate_default(), body, d_osc);
  return f_osc / f_idle;
}

}  // namespace terratail
