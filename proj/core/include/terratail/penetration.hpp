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

#ifndef TERRATAIL_PENETRATION_HPP_
#define TERRATAIL_PENETRATION_HPP_

#include <functional>
#include <utility>

#include "terratail/types.hpp"

namespace terratail {

// Fluidization stiffness reduction dk(A) in N/m, per the substrate's dk_model.
// LinearInArea extrapolates through the two calibration points and clamps
// at 0.
double fluidization_dk(const Substrate& substrate, double area);

// Penetration resistance k_z in N/m. Idle: cz * A. Oscillating:
// cz * A - dk(A). Throws SubstrateYield when the oscillating stiffness
// would be <= 0.
double penetration_stiffness(const Substrate& substrate, double area,
                             const TailMode& mode);

// Linear pressure-sinkage law: f_z = k_z * d.
double penetration_force(double k_z, double depth);

struct SinkageSolverOptions {
  double abs_tol = 1e-9;  // N
  int max_iter = 200;
};

// Finds the depth where a monotone force curve balances the applied load by
// bracketing bisection. force_curve must satisfy force_curve(0) = 0 and be
// nondecreasing on [bracket.first, bracket.second].
double solve_sinkage(const std::function<double(double)>& force_curve,
                     double load, std::pair<double, double> depth_bracket,
                     const SinkageSolverOptions& opts = {});

// Equilibrium sinkage of the tail under the robot's rear weight. Uses the
// closed form load / k_z; identical to running solve_sinkage on the linear
// law.
double sinkage_for(const Substrate& substrate, const TailGeometry& tail,
                   const TailMode& mode, const RobotParams& robot);

}  // namespace terratail

#endif  // TERRATAIL_PENETRATION_HPP_
