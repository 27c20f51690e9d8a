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

#include "terratail/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace terratail {

PenetrationFit fit_penetration(const ForceTrace& trace,
                               std::pair<double, double> depth_window) {
  if (trace.kind != ForceTrace::Kind::kPenetration)
    throw std::invalid_argument("trace kind must be Penetration");
  const auto [d_lo, d_hi] = depth_window;
  if (!(d_hi > d_lo)) throw std::invalid_argument("empty depth window");

  double sdd = 0.0, sdf = 0.0;   // sums for the through-origin slope
  double sd = 0.0, sf = 0.0;     // sums for the intercept diagnostic
  int n = 0;
  for (const auto& s : trace.samples) {
    if (s.position < d_lo || s.position > d_hi) continue;
    sdd += s.position * s.position;
    sdf += s.position * s.force;
    sd += s.position;
    sf += s.force;
    ++n;
  }
  if (n < 10)
    throw InsufficientData("fewer than 10 samples inside the depth window");
  if (sdd <= 0.0)
    throw InsufficientData("window contains no positive depths");

  PenetrationFit fit{};
  fit.n_samples = n;
  fit.k_z = sdf / sdd;
  fit.negative_slope = fit.k_z <= 0.0;

  // Unconstrained-intercept diagnostic.
  const double denom = n * sdd - sd * sd;
  if (denom > 0.0) {
    const double free_slope = (n * sdf - sd * sf) / denom;
    fit.intercept_diag = (sf - free_slope * sd) / n;
  }

  double ss = 0.0;
  for (const auto& s : trace.samples) {
    if (s.position < d_lo || s.position > d_hi) continue;
    const double r = s.force - fit.k_z * s.position;
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  return fit;
}

FluidizationFit fit_fluidization(const ForceTrace& idle, const ForceTrace& osc,
                                 std::pair<double, double> depth_window) {
  FluidizationFit out{};
  out.idle_fit = fit_penetration(idle, depth_window);
  out.osc_fit = fit_penetration(osc, depth_window);
  out.dk = out.idle_fit.k_z - out.osc_fit.k_z;
  out.negative = out.dk < 0.0;
  return out;
}

double mean_shear(const ForceTrace& trace, std::pair<double, double> window) {
  if (trace.kind != ForceTrace::Kind::kShear)
    throw std::invalid_argument("trace kind must be Shear");
  const auto [s_lo, s_hi] = window;
  if (!(s_hi > s_lo)) throw std::invalid_argument("empty window");
  if (trace.samples.size() < 2)
    throw InsufficientData("need at least 2 samples");
  if (s_lo < trace.samples.front().position ||
      s_hi > trace.samples.back().position)
    throw WindowOutOfRange("window outside trace displacement range");

  // Interpolated force at displacement s.
  const auto force_at = [&](double s) {
    const auto& v = trace.samples;
    auto it = std::lower_bound(
        v.begin(), v.end(), s,
        [](const ForceTrace::Sample& a, double x) { return a.position < x; });
    if (it == v.begin()) return it->force;
    if (it == v.end()) return v.back().force;
    const auto& b = *it;
    const auto& a = *(it - 1);
    if (b.position == a.position) return b.force;
    const double t = (s - a.position) / (b.position - a.position);
    return a.force + t * (b.force - a.force);
  };

  // Trapezoid over the window in s, with exact endpoints.
  double area = 0.0;
  double prev_s = s_lo;
  double prev_f = force_at(s_lo);
  for (const auto& sample : trace.samples) {
    if (sample.position <= s_lo) continue;
    if (sample.position >= s_hi) break;
    area += 0.5 * (prev_f + sample.force) * (sample.position - prev_s);
    prev_s = sample.position;
    prev_f = sample.force;
  }
  area += 0.5 * (prev_f + force_at(s_hi)) * (s_hi - prev_s);
  return area / (s_hi - s_lo);
}

double drag_reduction(double mean_idle, double mean_osc) {
  if (!(mean_idle > 0.0))
    throw DegenerateBaseline("idle mean shear must be > 0");
  return 1.0 - mean_osc / mean_idle;
}

double speed_from_mocap(const MocapTrace& trace) {
  const auto& v = trace.samples;
  if (v.size() < 2 || !(v.back().time > v.front().time))
    throw InsufficientData("need >= 2 samples spanning > 0 s");
  double st = 0.0, sx = 0.0, stt = 0.0, stx = 0.0;
  const auto n = static_cast<double>(v.size());
  for (const auto& s : v) {
    st += s.time;
    sx += s.x;
    stt += s.time * s.time;
    stx += s.time * s.x;
  }
  const double denom = n * stt - st * st;
  if (denom <= 0.0) throw InsufficientData("degenerate time axis");
  return (n * stx - st * sx) / denom;
}

double speed_improvement(double v_idle, double v_osc) {
  if (!(v_idle > 0.0)) throw DegenerateBaseline("idle speed must be > 0");
  return (v_osc - v_idle) / v_idle;
}

Substrate build_substrate(const std::vector<PenetrationPoint>& fits,
                          double mean_shear_idle, double mean_shear_osc,
                          const ShearRig& rig, DkModel dk_model) {
  if (fits.size() < 2)
    throw InsufficientData("need penetration fits at >= 2 areas");
  for (std::size_t i = 0; i < fits.size(); ++i)
    for (std::size_t j = i + 1; j < fits.size(); ++j)
      if (fits[i].area == fits[j].area)
        throw std::invalid_argument("calibration areas must be distinct");
  if (!(rig.width > 0.0 && rig.depth > 0.0))
    throw std::invalid_argument("rig geometry must be positive");

  double saa = 0.0, sak = 0.0;
  for (const auto& p : fits) {
    saa += p.area * p.area;
    sak += p.area * p.kz_idle;
  }
  const double cz = sak / saa;

  const auto small_it = std::min_element(
      fits.begin(), fits.end(),
      [](const auto& a, const auto& b) { return a.area < b.area; });
  const auto large_it = std::max_element(
      fits.begin(), fits.end(),
      [](const auto& a, const auto& b) { return a.area < b.area; });
  const double dk_small = small_it->kz_idle - small_it->kz_osc;
  const double dk_large = large_it->kz_idle - large_it->kz_osc;
  if (dk_small < 0.0 || dk_large < 0.0)
    throw InconsistentCalibration(
        "oscillating stiffness exceeds idle stiffness");

  const double reduction = drag_reduction(mean_shear_idle, mean_shear_osc);
  const double rho_s = 1.0 - reduction;
  if (!(rho_s > 0.0 && rho_s <= 1.0))
    throw InconsistentCalibration("rho_s outside (0, 1]");

  // Linear stress law over the rig plate: F = ks * w * d^2 / 2.
  const double ks = 2.0 * mean_shear_idle / (rig.width * rig.depth * rig.depth);

  return Substrate(cz, dk_small, dk_large, small_it->area, large_it->area,
                   dk_model, ks, rho_s);
}

}  // namespace terratail
