#include <cmath>
#include <random>

#include <doctest.h>

#include "terratail/penetration.hpp"
#include "test_support.hpp"

using namespace terratail;
using tt_test::lab_robot;
using tt_test::lab_substrate;
using tt_test::substrate_with_dk;

TEST_CASE("penetration stiffness scales linearly with area") {
  // cz = 0.2 N/cm per cm^2, A = 16 cm^2 -> k_z = 3.2 N/cm = 320 N/m
  const auto s = lab_substrate();
  CHECK(penetration_stiffness(s, 16e-4, TailMode::idle()) ==
        doctest::Approx(320.0).epsilon(1e-12));

  // oscillating with dk = 0.51 N/cm -> 2.69 N/cm
  const auto s51 = substrate_with_dk(51.0);
  CHECK(penetration_stiffness(s51, 16e-4, TailMode::oscillate_default()) ==
        doctest::Approx(269.0).epsilon(1e-12));
}

TEST_CASE("fluidization exceeding quiescent strength yields") {
  // cz*A = 0.3 N/cm = 30 N/m, dk = 0.35 N/cm = 35 N/m
  const auto s = substrate_with_dk(35.0);
  const double area = 30.0 / s.cz;
  CHECK_THROWS_AS(
      penetration_stiffness(s, area, TailMode::oscillate_default()),
      SubstrateYield);
  // idle path is unaffected
  CHECK(penetration_stiffness(s, area, TailMode::idle()) ==
        doctest::Approx(30.0));
}

TEST_CASE("dk models") {
  const auto s_const = lab_substrate(DkModel::kConstant);
  CHECK(fluidization_dk(s_const, 8e-4) == doctest::Approx(43.0));
  CHECK(fluidization_dk(s_const, 100e-4) == doctest::Approx(43.0));

  const auto s_lin = lab_substrate(DkModel::kLinearInArea);
  CHECK(fluidization_dk(s_lin, 2e-4) == doctest::Approx(35.0));
  CHECK(fluidization_dk(s_lin, 16e-4) == doctest::Approx(51.0));
  CHECK(fluidization_dk(s_lin, 9e-4) == doctest::Approx(43.0));

  // a reduction that shrinks with area extrapolates to 0, never negative
  const Substrate shrinking(2e5, 51.0, 35.0, 2e-4, 16e-4,
                            DkModel::kLinearInArea, 1e6, 0.54);
  CHECK(fluidization_dk(shrinking, 100e-4) == 0.0);
}

TEST_CASE("penetration force is linear in depth") {
  CHECK(penetration_force(200.0, 0.01) == doctest::Approx(2.0));  // 2 N/cm at 1 cm
  CHECK(penetration_force(123.0, 0.0) == 0.0);
  CHECK(penetration_force(150.0, 0.04) == doctest::Approx(6.0));  // 1.5 N/cm at 4 cm
  CHECK_THROWS_AS(penetration_force(0.0, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(penetration_force(200.0, -0.01), std::invalid_argument);
}

TEST_CASE("sinkage solver: linear closed form") {
  const auto linear = [](double d) { return 200.0 * d; };
  CHECK(solve_sinkage(linear, 2.0, {0.0, 0.08}) ==
        doctest::Approx(0.01).epsilon(1e-9));
  CHECK(solve_sinkage(linear, 0.0, {0.0, 0.08}) == 0.0);
}

TEST_CASE("sinkage solver: quadratic curve against the analytic root") {
  // f(d) = d^2 with d in cm and f in N: f(d_m) = (100 d)^2; load 4 N -> 2 cm
  const auto quad = [](double d) { return (100.0 * d) * (100.0 * d); };
  const double d = solve_sinkage(quad, 4.0, {0.0, 0.08});
  CHECK(d == doctest::Approx(0.02).epsilon(1e-7));
}

TEST_CASE("sinkage solver: error paths") {
  const auto linear = [](double d) { return 200.0 * d; };
  CHECK_THROWS_AS(solve_sinkage(linear, 100.0, {0.0, 0.08}), NoIntersection);
  const auto bumpy = [](double d) { return d < 0.05 ? 10.0 * d : 1.0 - 5.0 * d; };
  CHECK_THROWS_AS(solve_sinkage(bumpy, 0.55, {0.0, 0.08}), NonMonotone);
}

TEST_CASE("bisection matches load/k_z to 1e-9 relative on 1000 draws") {
  std::mt19937 rng(20260824);
  std::uniform_real_distribution<double> kz_dist(10.0, 1e4);
  std::uniform_real_distribution<double> load_dist(1.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double kz = kz_dist(rng);
    const double load = load_dist(rng);
    const double expected = load / kz;
    const double d =
        solve_sinkage([kz](double x) { return kz * x; }, load,
                      {0.0, 2.0 * expected + 1.0});
    CHECK(std::abs(d - expected) / expected <= 1e-9);
  }
}

TEST_CASE("sinkage_for balances the rear weight") {
  // m = 0.4 kg, fraction 0.5 -> W = 1.962 N; k_z = 2 N/cm -> d = 0.981 cm
  const auto robot = lab_robot(0.4);
  const auto s = lab_substrate();
  const TailGeometry tail(1e-3, 0.04);  // k_z = 2e5 * 1e-3 = 200 N/m
  const double d = sinkage_for(s, tail, TailMode::idle(), robot);
  CHECK(d == doctest::Approx(0.00981).epsilon(1e-12));
}

TEST_CASE("sinkage orderings") {
  const auto robot = lab_robot();
  const auto s = substrate_with_dk(43.0);
  const TailGeometry small(4e-4, 0.04), large(16e-4, 0.04);

  // oscillate sinks deeper than idle at fixed area
  for (const auto& tail : {small, large}) {
    CHECK(sinkage_for(s, tail, TailMode::oscillate_default(), robot) >
          sinkage_for(s, tail, TailMode::idle(), robot));
  }
  // sinkage decreases with area at fixed mode
  CHECK(sinkage_for(s, large, TailMode::idle(), robot) <
        sinkage_for(s, small, TailMode::idle(), robot));

  // doubling area halves sinkage when dk = 0
  const auto s0 = substrate_with_dk(0.0);
  const TailGeometry doubled(8e-4, 0.04);
  CHECK(sinkage_for(s0, doubled, TailMode::oscillate_default(), robot) ==
        doctest::Approx(0.5 *
                        sinkage_for(s0, small, TailMode::oscillate_default(),
                                    robot)));
}

TEST_CASE("round-trip: force at the solved depth equals the load") {
  const auto s = lab_substrate();
  const auto robot = lab_robot();
  for (double area_cm2 : {2.0, 4.0, 8.0, 12.0, 16.0, 20.0, 24.0}) {
    const TailGeometry tail(area_cm2 * 1e-4, 0.04);
    const double kz = penetration_stiffness(s, tail.area, TailMode::idle());
    const double d = sinkage_for(s, tail, TailMode::idle(), robot);
    CHECK(penetration_force(kz, d) ==
          doctest::Approx(robot.rear_weight()).epsilon(1e-12));
  }
}
