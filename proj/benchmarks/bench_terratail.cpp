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

#include <benchmark/benchmark.h>

#include "terratail/codesign.hpp"
#include "terratail/shear.hpp"

namespace {

using namespace terratail;

Substrate bench_substrate() {
  return Substrate(2e5, 43.0, 43.0, 2e-4, 16e-4, DkModel::kConstant, 1e6,
                   0.54);
}

RobotParams bench_robot() {
  return RobotParams(0.4, 0.2, 60.0, 0.06, 0.04);
}

void BM_DragForce(benchmark::State& state) {
  const auto substrate = bench_substrate();
  // Tapered profile with a few segments.
  const BodyProfile body(
      {{0.0, 0.05}, {0.02, 0.045}, {0.05, 0.03}, {0.5, 0.02}});
  const auto mode = TailMode::idle();
  for (auto _ : state) {
    benchmark::DoNotOptimize(drag_force(substrate, mode, body, 0.3));
  }
}
BENCHMARK(BM_DragForce);

void BM_Sweep(benchmark::State& state) {
  const auto substrate = bench_substrate();
  const auto robot = bench_robot();
  const auto body = BodyProfile::constant_width(0.05, 1.0);
  std::vector<double> areas;
  for (int i = 0; i < state.range(0); ++i)
    areas.push_back((2.0 + 22.0 * i / state.range(0)) * 1e-4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(substrate, areas, body, robot));
  }
}
BENCHMARK(BM_Sweep)->Arg(25)->Arg(100)->Arg(1000);

void BM_CrossoverArea(benchmark::State& state) {
  const auto substrate = bench_substrate();
  const auto robot = bench_robot();
  const auto body = BodyProfile::constant_width(0.05, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        crossover_area(substrate, body, robot, {3e-4, 24e-4}));
  }
}
BENCHMARK(BM_CrossoverArea);

}  // namespace

BENCHMARK_MAIN();
