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

#ifndef TERRATAIL_CODESIGN_HPP_
#define TERRATAIL_CODESIGN_HPP_

#include <utility>
#include <vector>

#include "terratail/types.hpp"

namespace terratail {

inline constexpr double kDefaultEpsilon = 0.02;

// Thresholds the drag ratio around R = 1 with a dead band of half-width
// epsilon: Idle when R > 1+epsilon, Oscillate when R < 1-epsilon, else
// Indifferent.
Action recommend(double ratio, double epsilon);

// One CodesignRow per area, in input order. Areas where the oscillating
// stiffness is non-positive are flagged (yielded) and recommend Idle; errors
// never abort the sweep. When parallel is true rows are computed on multiple
// threads; the output is identical to the serial schedule.
std::vector<CodesignRow> sweep(const Substrate& substrate,
                               const std::vector<double>& areas,
                               const BodyProfile& body,
                               const RobotParams& robot,
                               double epsilon = kDefaultEpsilon,
                               bool parallel = false);

struct CrossoverResult {
  double area;  // m^2, where R(A) crosses 1
  bool monotone_warning = false;  // sampled R was not monotone on the bracket
};

// Bisection on R(A) - 1. Default tolerance is 0.01 cm^2. The bracket must
// straddle R = 1 (R > 1 at the low end, R < 1 at the high end), otherwise
// NoCrossover is thrown.
CrossoverResult crossover_area(const Substrate& substrate,
                               const BodyProfile& body,
                               const RobotParams& robot,
                               std::pair<double, double> bracket,
                               double tol = 1e-6);

}  // namespace terratail

#endif  // TERRATAIL_CODESIGN_HPP_
