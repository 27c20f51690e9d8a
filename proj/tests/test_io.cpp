#include <sstream>

#include <doctest.h>

#include "terratail/csv.hpp"
#include "terratail/format.hpp"
#include "terratail/report.hpp"
#include "test_support.hpp"

using namespace terratail;
using tt_test::deep_body;
using tt_test::lab_robot;
using tt_test::substrate_with_dk;

TEST_CASE("penetration trace CSV parses, comments ignored, cm converted") {
  std::istringstream in(
      "# lab trace, 2026-03-14\n"
      "time_s,depth_cm,force_N\n"
      "0.0,0.0,0.0\n"
      "# mid-run comment\n"
      "0.5,1.0,2.0\n"
      "1.0,2.0,4.0\n");
  const auto trace = read_force_trace(in, ForceTrace::Kind::kPenetration);
  REQUIRE(trace.samples.size() == 3);
  CHECK(trace.samples[1].position == doctest::Approx(0.01));
  CHECK(trace.samples[2].force == 4.0);
}

TEST_CASE("malformed header names the missing column") {
  std::istringstream in("time_s,depth_mm,force_N\n0,0,0\n");
  try {
    read_force_trace(in, ForceTrace::Kind::kPenetration);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("depth_cm") != std::string::npos);
    CHECK(e.line() == 1);
  }
}

TEST_CASE("bad value reports the line number") {
  std::istringstream in(
      "time_s,disp_cm,force_N\n"
      "0.0,0.0,0.0\n"
      "0.5,oops,2.0\n");
  try {
    read_force_trace(in, ForceTrace::Kind::kShear);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("disp_cm") != std::string::npos);
  }
}

TEST_CASE("mocap trace with and without tail_z") {
  std::istringstream with_tail(
      "time_s,x_cm,y_cm,z_cm,pitch_deg,tail_z_cm\n"
      "0.0,0,0,0,0,-1.0\n"
      "0.1,0.5,0,0,1.5,-1.2\n");
  const auto t1 = read_mocap_trace(with_tail);
  REQUIRE(t1.samples.size() == 2);
  REQUIRE(t1.samples[1].tail_z.has_value());
  CHECK(*t1.samples[1].tail_z == doctest::Approx(-0.012));
  CHECK(t1.samples[1].x == doctest::Approx(0.005));

  std::istringstream without(
      "time_s,x_cm,y_cm,z_cm,pitch_deg\n0,0,0,0,0\n0.1,1,0,0,0\n");
  const auto t2 = read_mocap_trace(without);
  CHECK_FALSE(t2.samples[0].tail_z.has_value());
}

TEST_CASE("format_double is shortest round-trip") {
  for (double v : {0.1, 1.0 / 3.0, 6.9, 1e-9, 12345.678901234567}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("codesign report: byte-identical across runs and schedules") {
  const auto s = substrate_with_dk(43.0);
  const auto robot = lab_robot();
  const auto body = deep_body();
  std::vector<double> areas;
  for (int i = 0; i < 100; ++i) areas.push_back((2.0 + 0.25 * i) * 1e-4);

  const auto serial =
      make_codesign_report(s, areas, body, robot, 0.02, false, "digest");
  for (int run = 0; run < 3; ++run) {
    const auto parallel =
        make_codesign_report(s, areas, body, robot, 0.02, true, "digest");
    CHECK(serial.csv == parallel.csv);
    CHECK(serial.svg == parallel.svg);
  }
  CHECK(serial.crossover_area.has_value());

  // metadata comment with version and input hash
  CHECK(serial.csv.rfind("# terratail v", 0) == 0);
  CHECK(serial.csv.find(hex64(fnv1a("digest"))) != std::string::npos);
  // header row present
  CHECK(serial.csv.find("area_cm2,sink_idle_cm") != std::string::npos);
  // SVG is self-contained
  CHECK(serial.svg.rfind("<svg", 0) == 0);
  CHECK(serial.svg.find("</svg>") != std::string::npos);
}

TEST_CASE("predict report contains one row per tail and mode") {
  const auto s = substrate_with_dk(43.0);
  const auto robot = lab_robot();
  const auto body = deep_body();
  const std::vector<TailGeometry> tails = {
      {2e-4, 0.04}, {16e-4, 0.04}};
  const auto report = make_predict_report(PredictKind::kRatio, s, tails, body,
                                          robot, "x");
  // 2 tails x 2 modes = 4 data lines after metadata + header
  int lines = 0;
  for (char c : report.csv)
    if (c == '\n') ++lines;
  CHECK(lines == 6);
  // A = 2 cm^2 oscillating row carries the yield error instead of aborting
  CHECK(report.csv.find("yield") != std::string::npos);
}

TEST_CASE("simulate report trajectory CSV") {
  const auto s = substrate_with_dk(43.0);
  const auto robot = lab_robot();
  const auto body = deep_body();
  const auto report =
      make_simulate_report(robot, s, TailGeometry(16e-4, 0.04),
                           TailMode::oscillate_default(), body, 3, {}, "x");
  CHECK(report.trajectory.size() == 3);
  CHECK(report.csv.find("step,d_rear_cm") != std::string::npos);
  CHECK(report.svg.find("</svg>") != std::string::npos);
}
