#include <doctest.h>

#include <cmath>

#include "scenario.hpp"

using namespace riscov;

TEST_CASE("defaults carry the standard parameter set") {
  const Scenario scn = default_scenario();
  CHECK(scn.site.bs_height_m == 35.0);
  CHECK(scn.site.ue_height_m == 1.5);
  CHECK(scn.site.ris_height_m == 2.0);
  CHECK(scn.panel.count_m == 25);
  CHECK(scn.panel.count_n == 25);
  CHECK(scn.panel.element_width_m == 0.04);
  CHECK(scn.panel.element_height_m == 0.04);
  CHECK(scn.radio.noise_w == doctest::Approx(2.511886431509582e-13).epsilon(1e-12));
  CHECK(scn.radio.wavelength_m == 0.1);
  CHECK(scn.radio.antenna_gain == 1.0);
  CHECK(scn.radio.pathloss_exponent == 2.0);
  CHECK(linear_to_db(scn.radio.sensitivity) == doctest::Approx(8.0));
  CHECK(linear_to_db(scn.radio.margin) == doctest::Approx(28.0));
  CHECK(linear_to_db(scn.radio.threshold) == doctest::Approx(36.0));
  CHECK(scn.solver.quad_intervals == 50);
  CHECK(scn.incidence_mode == IncidenceMode::Full3d);
  CHECK(scn.mc_mode == PathlossMode::ExactElementwise);
  scn.validate();
}

TEST_CASE("parsing a scenario file") {
  const char* text = R"(
# test scenario
radio.power_w = 1.5
radio.noise_dbm = -90      # trailing comment
panel.m = 16
panel.n = 8
site.distance_m = 80

solver.k = 20
solver.incidence_mode = horizontal
solver.mc_mode = common
solver.threads = 2
)";
  const Scenario scn = parse_scenario(text);
  CHECK(scn.radio.power_w == 1.5);
  CHECK(watt_to_dbm(scn.radio.noise_w) == doctest::Approx(-90.0));
  CHECK(scn.panel.count_m == 16);
  CHECK(scn.panel.count_n == 8);
  CHECK(scn.site.horizontal_distance_m == 80.0);
  CHECK(scn.solver.quad_intervals == 20);
  CHECK(scn.incidence_mode == IncidenceMode::Horizontal);
  CHECK(scn.mc_mode == PathlossMode::CommonPathloss);
  CHECK(scn.threads == 2);
  // untouched keys keep defaults
  CHECK(scn.site.bs_height_m == 35.0);
}

TEST_CASE("empty text gives the defaults") {
  const Scenario scn = parse_scenario("");
  CHECK(scn.site.horizontal_distance_m == 100.0);
}

TEST_CASE("parse failures") {
  CHECK_THROWS_AS(parse_scenario("radio.unknown = 1"), Error);
  CHECK_THROWS_AS(parse_scenario("radio.power_w = watts"), Error);
  CHECK_THROWS_AS(parse_scenario("just a line"), Error);
  CHECK_THROWS_AS(parse_scenario("panel.m = 2.5"), Error);
  CHECK_THROWS_AS(parse_scenario("site.distance_m = -4"), Error);
  CHECK_THROWS_AS(parse_scenario("site.orientation_rad = 3.141592653589793"), Error);
  CHECK_THROWS_AS(parse_scenario("solver.root_tol = 0.1"), Error);

  try {
    parse_scenario("radio.power_w = -1");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.status() == Status::ParseFailure);
  }
}

TEST_CASE("threshold consistency") {
  // consistent (8 + 28 = 36)
  CHECK_NOTHROW(parse_scenario("radio.threshold_db = 36"));
  // order independent
  CHECK_NOTHROW(parse_scenario("radio.threshold_db = 30\nradio.sensitivity_db = 2"));
  // slack of 0.01 dB
  CHECK_NOTHROW(parse_scenario("radio.threshold_db = 36.009"));
  CHECK_THROWS_AS(parse_scenario("radio.threshold_db = 35.9"), Error);
  // derived when absent
  const Scenario scn = parse_scenario("radio.sensitivity_db = 10\nradio.margin_db = 20");
  CHECK(linear_to_db(scn.radio.threshold) == doctest::Approx(30.0));
}

TEST_CASE("set and get by key") {
  Scenario scn = default_scenario();
  scenario_set(scn, "panel.m", 30);
  CHECK(scenario_get(scn, "panel.m") == 30.0);
  scenario_set(scn, "radio.noise_dbm", -100.0);
  CHECK(watt_to_dbm(scn.radio.noise_w) == doctest::Approx(-100.0));
  scenario_set_string(scn, "solver.incidence_mode", "horizontal");
  CHECK(scn.incidence_mode == IncidenceMode::Horizontal);

  CHECK_THROWS_AS(scenario_set(scn, "nope", 1.0), Error);
  CHECK_THROWS_AS(scenario_set(scn, "site.orientation_rad", 4.0), Error);
  CHECK_THROWS_AS(scenario_set_string(scn, "solver.mc_mode", "sometimes"), Error);
  CHECK_THROWS_AS(scenario_get(scn, "nope"), Error);

  // a failed set leaves the scenario untouched
  const double before = scenario_get(scn, "site.orientation_rad");
  CHECK_THROWS_AS(scenario_set(scn, "site.orientation_rad", -1.0), Error);
  CHECK(scenario_get(scn, "site.orientation_rad") == before);
}

TEST_CASE("echo round-trips the configuration") {
  Scenario scn = default_scenario();
  scenario_set(scn, "radio.power_w", 1.25);
  scenario_set(scn, "panel.m", 11);
  scenario_set(scn, "site.orientation_rad", 0.7);
  scenario_set_string(scn, "solver.mc_mode", "common");

  std::string text;
  for (const auto& [key, value] : scenario_echo(scn)) {
    text += key + " = " + value + "\n";
  }
  const Scenario back = parse_scenario(text);
  CHECK(back.radio.power_w == doctest::Approx(scn.radio.power_w).epsilon(1e-12));
  CHECK(back.panel.count_m == scn.panel.count_m);
  CHECK(back.site.orientation_rad == doctest::Approx(scn.site.orientation_rad).epsilon(1e-12));
  CHECK(back.mc_mode == PathlossMode::CommonPathloss);
  CHECK(back.threads == scn.threads);

  // echo order is stable
  const auto echo_a = scenario_echo(scn);
  const auto echo_b = scenario_echo(scn);
  REQUIRE(echo_a.size() == echo_b.size());
  for (size_t i = 0; i < echo_a.size(); ++i) {
    CHECK(echo_a[i].first == echo_b[i].first);
    CHECK(echo_a[i].second == echo_b[i].second);
  }
}

TEST_CASE("sub-wavelength advisory") {
  std::vector<std::string> warnings;
  parse_scenario("panel.element_width_m = 0.2", &warnings);
  REQUIRE(warnings.size() == 1);
  warnings.clear();
  parse_scenario("panel.element_width_m = 0.04", &warnings);
  CHECK(warnings.empty());
}

TEST_CASE("zero-element panels are allowed") {
  const Scenario scn = parse_scenario("panel.m = 0\npanel.n = 0");
  CHECK(scn.panel.count_m == 0);
  CHECK(scn.panel.total_elements() == 0.0);
}
