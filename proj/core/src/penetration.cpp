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

#include "terratail/penetration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace terratail {

double fluidization_dk(const Substrate& s, double area) {
  if (!(area > 0.0)) throw std::invalid_argument("area must be > 0");
  switch (s.dk_model) {
    case DkModel::kConstant:
      return 0.5 * (s.dk_small + s.dk_large);
    case DkModel::kLinearInArea: {
      const double slope = (s.dk_large - s.dk_small) / (s.a_large - s.a_small);
      return std::max(0.0, s.dk_small + slope * (area - s.a_small));
    }
  }
  throw std::logic_error("unreachable dk_model");
}

double penetration_stiffness(const Substrate& s, double area,
                             const TailMode& mode) {
  if (!(area > 0.0)) throw std::invalid_argument("area must be > 0");
  const double k_quiescent = s.cz * area;
  if (!mode.oscillating()) return k_quiescent;
  const double k = k_quiescent - fluidization_dk(s, area);
  if (k <= 0.0)
    throw SubstrateYield(
        "substrate yields: fluidization reduction exceeds quiescent stiffness");
  return k;
}

double penetration_force(double k_z, double depth) {
  if (!(k_z > 0.0)) throw std::invalid_argument("k_z must be > 0");
  if (!(depth >= 0.0)) throw std::invalid_argument("depth must be >= 0");
  return k_z * depth;
}

double solve_sinkage(const std::function<double(double)>& force_curve,
                     double load, std::pair<double, double> depth_bracket,
                     const SinkageSolverOptions& opts) {
  if (!(load >= 0.0)) throw std::invalid_argument("load must be >= 0");
  double lo = depth_bracket.first;
  double hi = depth_bracket.second;
  if (!(lo >= 0.0 && hi > lo))
    throw std::invalid_argument("invalid depth bracket");

  double f_lo = force_curve(lo);
  double f_hi = force_curve(hi);
  if (f_hi < f_lo) throw NonMonotone("force curve decreases across bracket");
  if (f_lo > load + opts.abs_tol)
    throw NonMonotone("force at lower bracket already exceeds load");
  if (f_hi < load) throw NoIntersection("force curve never reaches load");
  if (std::abs(f_lo - load) <= opts.abs_tol) return lo;

  for (int i = 0; i < opts.max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = force_curve(mid);
    if (std::abs(f_mid - load) <= opts.abs_tol) return mid;
    if (f_mid < f_lo || f_mid > f_hi)
      throw NonMonotone("force curve not monotone inside bracket");
    if (f_mid < load) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  return 0.5 * (lo + hi);
}

double sinkage_for(const Substrate& substrate, const TailGeometry& tail,
                   const TailMode& mode, const RobotParams& robot) {
  const double k_z = penetration_stiffness(substrate, tail.area, mode);
  return robot.rear_weight() / k_z;
}

}  // namespace terratail
