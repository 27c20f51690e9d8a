#include <cmath>

#include <doctest.h>

#include "terratail/codesign.hpp"
#include "test_support.hpp"

using namespace terratail;
using tt_test::deep_body;
using tt_test::lab_robot;
using tt_test::substrate_with_dk;

namespace {

std::vector<double> lab_areas() {
  std::vector<double> areas;
  for (double a : {2.0, 4.0, 8.0, 12.0, 16.0, 20.0, 24.0})
    areas.push_back(a * 1e-4);
  return areas;
}

}  // namespace

TEST_CASE("recommend thresholds around R = 1") {
  CHECK(recommend(0.54, 0.02) == Action::kOscillate);
  CHECK(recommend(1.0, 0.02) == Action::kIndifferent);
  CHECK(recommend(1.5, 0.02) == Action::kIdle);
  CHECK(recommend(1.02, 0.02) == Action::kIndifferent);
  CHECK_THROWS_AS(recommend(-0.1, 0.02), std::invalid_argument);
}

TEST_CASE("recommendation is antitone in R") {
  const auto rank = [](Action a) {
    return a == Action::kIdle ? 0 : a == Action::kIndifferent ? 1 : 2;
  };
  int prev = 0;
  for (double r = 2.0; r >= 0.0; r -= 0.001) {
    const int cur = rank(recommend(r, 0.02));
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("sweep over the experimental tail set") {
  const auto s = substrate_with_dk(43.0);
  const auto robot = lab_robot();
  const auto body = deep_body();
  const auto rows = sweep(s, lab_areas(), body, robot);

  REQUIRE(rows.size() == 7);
  // A = 2 cm^2: cz*A = 40 N/m < dk -> yield, recommend Idle
  CHECK(rows[0].yielded);
  CHECK(rows[0].recommendation == Action::kIdle);
  CHECK(std::isnan(rows[0].ratio));

  // remaining rows: R strictly decreasing, small areas Idle, large Oscillate
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK_FALSE(rows[i].yielded);
    CHECK(rows[i].ratio < prev);
    CHECK(rows[i].sink_osc > rows[i].sink_idle);
    prev = rows[i].ratio;
  }
  CHECK(rows[1].recommendation == Action::kIdle);       // 4 cm^2, R > 1
  CHECK(rows.back().recommendation == Action::kOscillate);  // 24 cm^2
}

TEST_CASE("sweep limit cases") {
  const auto robot = lab_robot();
  const auto body = deep_body();

  for (const auto& row :
       sweep(substrate_with_dk(0.0), lab_areas(), body, robot)) {
    CHECK(row.recommendation == Action::kOscillate);
    CHECK(row.ratio == doctest::Approx(0.54).epsilon(1e-12));
  }

  for (const auto& row :
       sweep(substrate_with_dk(43.0, 1.0), lab_areas(), body, robot)) {
    CHECK(row.recommendation == Action::kIdle);
  }
}

TEST_CASE("sweep is deterministic and schedule-independent") {
  const auto s = substrate_with_dk(43.0);
  const auto robot = lab_robot();
  const auto body = deep_body();
  std::vector<double> areas;
  for (int i = 0; i < 100; ++i) areas.push_back((2.0 + 0.25 * i) * 1e-4);

  const auto serial = sweep(s, areas, body, robot, 0.02, false);
  const auto parallel = sweep(s, areas, body, robot, 0.02, true);
  REQUIRE(serial.size() == parallel.size());
  // NaN fields (yielded rows) compare bitwise, not with ==
  const auto same = [](double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
  };
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(same(serial[i].ratio, parallel[i].ratio));
    CHECK(same(serial[i].sink_osc, parallel[i].sink_osc));
    CHECK(serial[i].sink_idle == parallel[i].sink_idle);
    CHECK(serial[i].recommendation == parallel[i].recommendation);
    CHECK(serial[i].note == parallel[i].note);
  }
}

TEST_CASE("crossover area matches the closed form") {
  // A* = dk / (cz * (1 - sqrt(rho_s)))
  const double dk = 43.0, cz = 2e5, rho_s = 0.54;
  const auto s = substrate_with_dk(dk, rho_s, cz);
  const auto robot = lab_robot();
  const auto body = deep_body();

  const double expected = dk / (cz * (1.0 - std::sqrt(rho_s)));
  const auto result = crossover_area(s, body, robot, {4e-4, 24e-4});
  CHECK_FALSE(result.monotone_warning);
  CHECK(std::abs(result.area - expected) / expected < 1e-3);
  // the lab substrate puts the regime boundary near 8.1 cm^2
  CHECK(result.area * 1e4 == doctest::Approx(8.11).epsilon(0.01));
}

TEST_CASE("crossover error paths") {
  const auto robot = lab_robot();
  const auto body = deep_body();
  // rho_s = 1 -> R >= 1 everywhere
  CHECK_THROWS_AS(
      crossover_area(substrate_with_dk(43.0, 1.0), body, robot, {4e-4, 24e-4}),
      NoCrossover);
  // bracket entirely above the crossover
  CHECK_THROWS_AS(
      crossover_area(substrate_with_dk(43.0), body, robot, {16e-4, 24e-4}),
      NoCrossover);
}
