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

#ifndef TERRATAIL_UNITS_HPP_
#define TERRATAIL_UNITS_HPP_

namespace terratail::units {

// All library internals are strict SI (m, kg, s, N). Experimental data and
// file formats are cm-based; conversion happens only at the I/O boundary.

inline constexpr double kCmToM = 1e-2;
inline constexpr double kMToCm = 1e2;

inline constexpr double kCm2ToM2 = 1e-4;
inline constexpr double kM2ToCm2 = 1e4;

// Stiffness per unit depth: N/cm -> N/m.
inline constexpr double kNPerCmToNPerM = 1e2;
inline constexpr double kNPerMToNPerCm = 1e-2;

// Penetration-stiffness density: N/cm per cm^2 -> N/m per m^2 (N/m^3).
inline constexpr double kCzCgsToSi = 1e6;
inline constexpr double kCzSiToCgs = 1e-6;

// Shear-stress coefficient: N/cm^3 -> N/m^3.
inline constexpr double kKsCgsToSi = 1e6;
inline constexpr double kKsSiToCgs = 1e-6;

}  // namespace terratail::units

#endif  // TERRATAIL_UNITS_HPP_
