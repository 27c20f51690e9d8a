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

#ifndef TERRATAIL_CALIBRATION_HPP_
#define TERRATAIL_CALIBRATION_HPP_

#include <utility>
#include <vector>

#include "terratail/types.hpp"

namespace terratail {

// Default penetration fit window lower edge: the first 0.5 cm of depth is a
// surface-engagement transient and excluded from fits.
inline constexpr double kDefaultFitDepthMin = 0.005;  // m

// Default shear averaging window, matching the rig's 18 cm stroke.
inline constexpr std::pair<double, double> kDefaultShearWindow = {0.025, 0.175};

struct PenetrationFit {
  double k_z = 0.0;          // N/m, slope through the origin
  double residual_rms = 0.0; // N
  int n_samples = 0;
  // Intercept of an unconstrained fit, N. A large value flags pre-load
  // artifacts; the reported k_z is always the through-origin slope.
  double intercept_diag = 0.0;
  bool negative_slope = false;
};

// Least-squares slope of force versus depth constrained through the origin,
// over samples whose depth lies inside the window. Requires >= 10 samples in
// the window and a penetration-kind trace.
PenetrationFit fit_penetration(const ForceTrace& trace,
                               std::pair<double, double> depth_window);

struct FluidizationFit {
  double dk = 0.0;  // N/m; may be negative (reported, flagged)
  bool negative = false;
  PenetrationFit idle_fit;
  PenetrationFit osc_fit;
};

// dk = k_z(idle) - k_z(oscillating) over a common depth window.
FluidizationFit fit_fluidization(const ForceTrace& idle, const ForceTrace& osc,
                                 std::pair<double, double> depth_window);

// Displacement-weighted (trapezoidal in s, not in time) mean force over the
// window. Throws WindowOutOfRange when the window leaves the trace's
// displacement range.
double mean_shear(const ForceTrace& trace, std::pair<double, double> window);

// Fractional drag reduction 1 - mean_osc/mean_idle; negative values (drag
// increase) are returned, not clamped.
double drag_reduction(double mean_idle, double mean_osc);

// Average forward speed: slope of a least-squares linear fit of x versus t.
double speed_from_mocap(const MocapTrace& trace);

// Fractional speed improvement (v_osc - v_idle) / v_idle.
double speed_improvement(double v_idle, double v_osc);

// One penetration calibration point: idle and oscillating k_z at one area.
struct PenetrationPoint {
  double area;    // m^2
  double kz_idle; // N/m
  double kz_osc;  // N/m
};

// Shear-rig geometry: the dragged body is a constant-width plate held at a
// fixed insertion depth.
struct ShearRig {
  double width;  // m
  double depth;  // m
};

// Assembles a Substrate from penetration fits at >= 2 distinct areas plus
// the idle/oscillating mean shear forces from the drag rig.
//
//   cz     least-squares slope of kz_idle versus area, through the origin
//   dk_*   kz_idle - kz_osc at the smallest and largest calibrated areas
//   ks     from the idle mean shear force and the rig geometry under the
//          linear stress law: F = ks * w * d^2 / 2
//   rho_s  mean_osc / mean_idle (valid because the rig fixes the depth)
//
// Throws InconsistentCalibration when rho_s falls outside (0, 1].
Substrate build_substrate(const std::vector<PenetrationPoint>& fits,
                          double mean_shear_idle, double mean_shear_osc,
                          const ShearRig& rig,
                          DkModel dk_model = DkModel::kConstant);

}  // namespace terratail

#endif  // TERRATAIL_CALIBRATION_HPP_
