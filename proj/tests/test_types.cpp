#include <doctest.h>

#include "terratail/json_io.hpp"
#include "terratail/types.hpp"
#include "test_support.hpp"

using namespace terratail;

TEST_CASE("invariant violations name the offending field") {
  CHECK_THROWS_WITH_AS(Substrate(-1.0, 35, 51, 2e-4, 16e-4,
                                 DkModel::kConstant, 1e6, 0.54),
                       "Substrate.cz: must be > 0", ValidationError);
  CHECK_THROWS_AS(Substrate(2e5, -1, 51, 2e-4, 16e-4, DkModel::kConstant, 1e6,
                            0.54),
                  ValidationError);
  // a_small must be < a_large
  CHECK_THROWS_AS(Substrate(2e5, 35, 51, 16e-4, 2e-4, DkModel::kConstant, 1e6,
                            0.54),
                  ValidationError);
  CHECK_THROWS_AS(Substrate(2e5, 35, 51, 2e-4, 16e-4, DkModel::kConstant, 1e6,
                            1.5),
                  ValidationError);
  CHECK_THROWS_AS(TailGeometry(0.0, 0.04), ValidationError);
  CHECK_THROWS_AS(TailMode::oscillate(0.0, 60.0), ValidationError);
  CHECK_THROWS_AS(TailMode::oscillate(5.0, 181.0), ValidationError);
  CHECK_THROWS_AS(RobotParams(0.4, 0.2, 60, 0.06, 0.04, 1.0),
                  ValidationError);

  try {
    Substrate(2e5, 35, 51, 2e-4, 16e-4, DkModel::kConstant, 1e6, 0.0);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "rho_s");
    CHECK(e.type_name() == "Substrate");
  }
}

TEST_CASE("BodyProfile validation and interpolation") {
  CHECK_THROWS_AS(BodyProfile({{0.0, 0.05}}), ValidationError);
  CHECK_THROWS_AS(BodyProfile({{0.01, 0.05}, {0.02, 0.05}}), ValidationError);
  CHECK_THROWS_AS(BodyProfile({{0.0, 0.05}, {0.0, 0.05}}), ValidationError);
  CHECK_THROWS_AS(BodyProfile({{0.0, -0.1}, {0.1, 0.05}}), ValidationError);

  const BodyProfile tri({{0.0, 0.0}, {0.1, 0.2}});
  CHECK(tri.width_at(0.0) == 0.0);
  CHECK(tri.width_at(0.05) == doctest::Approx(0.1));
  CHECK(tri.width_at(0.1) == doctest::Approx(0.2));
  CHECK(tri.max_depth() == 0.1);
  CHECK_THROWS_AS(tri.width_at(0.11), DepthOutOfProfile);
}

TEST_CASE("trace invariants") {
  CHECK_THROWS_AS(ForceTrace(ForceTrace::Kind::kPenetration,
                             {{0.0, 0.0, 0.0}, {0.0, 0.01, 1.0}}),
                  ValidationError);
  CHECK_THROWS_AS(MocapTrace({{0.0, 0, 0, 0, 0, {}}}), ValidationError);
}

TEST_CASE("types are plain values") {
  const auto a = tt_test::lab_substrate();
  const auto b = a;
  CHECK(a == b);
  CHECK(TailMode::idle() == TailMode::idle());
  CHECK(TailMode::idle() != TailMode::oscillate_default());
}

TEST_CASE("JSON round-trip is exact in SI units") {
  // Irrational-ish values that would not survive a unit conversion.
  const Substrate s(123456.789012345, 34.9999999999, 51.0000000001, 2.3e-4,
                    15.7e-4, DkModel::kLinearInArea, 987654.321098765,
                    0.5400000000000001);
  CHECK(substrate_from_json(to_json(s)) == s);

  const TailGeometry tail(16.000000001e-4, 0.04123456789, "flat");
  CHECK(tail_geometry_from_json(to_json(tail)) == tail);

  const BodyProfile body({{0.0, 0.0512345}, {0.0333333333, 0.04}, {0.5, 0.0}});
  CHECK(body_profile_from_json(to_json(body)) == body);

  const auto robot = tt_test::lab_robot(0.412345678901);
  CHECK(robot_params_from_json(to_json(robot)) == robot);

  const auto mode = TailMode::oscillate(5.0, 60.0);
  CHECK(tail_mode_from_json(to_json(mode)) == mode);
}

TEST_CASE("cm-based JSON converts at the boundary") {
  const nlohmann::json j = {
      {"schema_version", 1}, {"units", "cm"},
      {"cz", 0.2},           {"dk_small", 0.35},
      {"dk_large", 0.51},    {"a_small", 2.0},
      {"a_large", 16.0},     {"dk_model", "constant"},
      {"ks", 1.0},           {"rho_s", 0.54},
  };
  const auto s = substrate_from_json(j);
  CHECK(s.cz == doctest::Approx(2e5));
  CHECK(s.dk_small == doctest::Approx(35.0));
  CHECK(s.dk_large == doctest::Approx(51.0));
  CHECK(s.a_small == doctest::Approx(2e-4));
  CHECK(s.ks == doctest::Approx(1e6));
  CHECK(s.rho_s == 0.54);

  // Emitting back in cm lands on the lab numbers.
  const auto out = to_json(s, JsonUnits::kCm);
  CHECK(out.at("cz").get<double>() == doctest::Approx(0.2));
  CHECK(out.at("dk_large").get<double>() == doctest::Approx(0.51));
}

TEST_CASE("JSON parse errors name the missing field") {
  // everything present except cz
  nlohmann::json j = to_json(tt_test::lab_substrate());
  j.erase("cz");
  CHECK_THROWS_WITH_AS(substrate_from_json(j), "missing field 'cz'",
                       ParseError);
  CHECK_THROWS_AS(substrate_from_json(nlohmann::json::array()), ParseError);
  CHECK_THROWS_AS(
      tail_mode_from_json(nlohmann::json{{"mode", "wiggle"}}), ParseError);
}
