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

#ifndef TERRATAIL_SHEAR_HPP_
#define TERRATAIL_SHEAR_HPP_

#include "terratail/types.hpp"

namespace terratail {

// Depth-proportional shear stress, N/m^2. Idle: ks * z. Oscillating: the
// fluidization ratio rho_s scales the stress uniformly over the submerged
// body.
double shear_stress(const Substrate& substrate, const TailMode& mode,
                    double z);

// Body drag at insertion depth d: integral of shear_stress(z) * w(z) over
// [0, d]. The integrand is a polynomial of degree <= 2 on each profile
// segment, so the per-segment closed form is exact. Throws DepthOutOfProfile
// when d exceeds the profile's last knot.
double drag_force(const Substrate& substrate, const TailMode& mode,
                  const BodyProfile& profile, double depth);

// Oscillate/idle body-drag ratio R = f_s^o / f_s^i. Each mode's drag is
// evaluated at that mode's equilibrium rear sinkage, so R combines the
// reduced substrate strength with the increased insertion depth. For a
// constant-width body this reduces to rho_s * (k_idle / k_osc)^2.
double drag_ratio(const Substrate& substrate, const TailGeometry& tail,
                  const BodyProfile& body, const RobotParams& robot);

}  // namespace terratail

#endif  // TERRATAIL_SHEAR_HPP_
