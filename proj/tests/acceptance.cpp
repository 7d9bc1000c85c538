// Acceptance suite: end-to-end checks of the analytic pipeline against its
// independent oracles. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fail.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "channel.hpp"
#include "coverage.hpp"
#include "geometry.hpp"
#include "montecarlo.hpp"
#include "placement.hpp"
#include "rng.hpp"
#include "scenario.hpp"

using namespace riscov;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct CaseRng {
  std::uint64_t seed;
  std::uint64_t counter = 0;
  double uniform(double lo, double hi) { return lo + (hi - lo) * rng::uniform01(seed, counter++); }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform(0.0, hi - lo + 1.0) * (1.0 - 1e-12));
  }
};

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

Scenario table1(double power_w = 2.0) {
  Scenario scn;
  scn.radio.power_w = power_w;
  scn.threads = 2;
  return scn;
}

// ---- criterion 1: coherent sum equals the closed form, common pathloss ----

Outcome criterion1() {
  CaseRng rnd{20250801};
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Scenario scn;
    scn.radio.wavelength_m = rnd.uniform(0.05, 0.3);
    scn.radio.antenna_gain = rnd.uniform(0.5, 4.0);
    scn.radio.pathloss_exponent = rnd.uniform(2.0, 3.5);
    scn.radio.power_w = rnd.uniform(0.5, 4.0);
    scn.panel.count_m = rnd.uniform_int(1, 12);
    scn.panel.count_n = rnd.uniform_int(1, 12);
    scn.panel.element_width_m = rnd.uniform(0.01, 0.05);
    scn.panel.element_height_m = rnd.uniform(0.01, 0.05);
    scn.site.bs_height_m = rnd.uniform(5.0, 50.0);
    scn.site.ue_height_m = rnd.uniform(1.0, 2.5);
    scn.site.ris_height_m = rnd.uniform(1.0, 6.0);
    scn.site.horizontal_distance_m = rnd.uniform(20.0, 250.0);
    scn.site.orientation_rad = rnd.uniform(0.2, kPi - 0.2);
    const UePolar ue{rnd.uniform(0.0, kTwoPi), rnd.uniform(5.0, 400.0)};

    const double summed =
        snr(scn.radio,
            composite_channel(scn.radio, scn.panel, scn.site, ue,
                              optimal_phases(scn.radio, scn.panel, scn.site, ue),
                              PathlossMode::CommonPathloss, scn.incidence_mode));
    const double theta = incidence_angle(scn.site, scn.incidence_mode);
    const double pl = scn.radio.antenna_gain *
                      std::pow(bs_ris_distance(scn.site), -scn.radio.pathloss_exponent) *
                      std::pow(ue_ris_distance(scn.site, ue), -scn.radio.pathloss_exponent);
    const double closed = max_snr_closed_form(eta_coefficients(scn.radio, scn.panel, theta),
                                              scn.panel, pl, bs_ue_distance(scn.site, ue));
    worst = std::max(worst, std::abs(summed - closed) / closed);
  }
  return {worst <= 1e-12, fmt("200 scenarios, max relative error %.2e (limit 1e-12)", worst)};
}

// ---- criterion 2: far-field error of the exact element-wise sum ----

Outcome criterion2() {
  CaseRng rnd{20250802};
  const Scenario base = table1();
  double worst = 0.0;
  int accepted = 0;
  while (accepted < 100) {
    Scenario scn = base;
    scn.site.horizontal_distance_m = rnd.uniform(20.0, 300.0);
    scn.site.orientation_rad = rnd.uniform(0.3, kPi - 0.3);
    const UePolar ue{rnd.uniform(0.0, kTwoPi), rnd.uniform(5.0, 500.0)};
    if (ue_ris_distance(scn.site, ue) < 20.0 || bs_ue_distance(scn.site, ue) < 20.0) continue;
    ++accepted;

    const double exact = mc_snr_at(scn, ue, PathlossMode::ExactElementwise);
    const double theta = incidence_angle(scn.site, scn.incidence_mode);
    const double pl = scn.radio.antenna_gain *
                      std::pow(bs_ris_distance(scn.site), -scn.radio.pathloss_exponent) *
                      std::pow(ue_ris_distance(scn.site, ue), -scn.radio.pathloss_exponent);
    const double closed = max_snr_closed_form(eta_coefficients(scn.radio, scn.panel, theta),
                                              scn.panel, pl, bs_ue_distance(scn.site, ue));
    worst = std::max(worst, std::abs(exact - closed) / closed);
  }
  return {worst <= 0.01, fmt("100 positions, max relative error %.2e (limit 1e-2)", worst)};
}

// ---- criterion 3: analytic area against the exact-mode Monte Carlo ----

Outcome criterion3() {
  bool pass = true;
  std::string detail;
  for (double d_h : {50.0, 100.0, 150.0, 200.0}) {
    Scenario scn = table1();
    scn.site.horizontal_distance_m = d_h;
    const double analytic = coverage_area(scn);
    const McEstimate est = mc_coverage_area(scn, 100000, 0);
    const double gap = std::abs(est.area_m2 - analytic) / analytic;
    pass = pass && gap <= 0.02;
    detail += fmt("D=%g: %.2f%%  ", d_h, 100.0 * gap);
  }
  return {pass, detail + "(limit 2%)"};
}

// ---- criterion 4: broadside orientation wins on every grid ----

Outcome criterion4() {
  bool pass = true;
  std::string detail;
  std::vector<double> grid;
  for (int j = 0; j < 37; ++j) grid.push_back(kPi * (0.05 + 0.90 * j / 36.0));

  for (double d_h : {50.0, 100.0, 200.0}) {
    Scenario scn = table1();
    scn.site.horizontal_distance_m = d_h;
    const auto sweep = orientation_sweep(scn, grid);
    size_t best = 0;
    double asym = 0.0;
    for (size_t i = 1; i < sweep.size(); ++i) {
      if (sweep[i].second > sweep[best].second) best = i;
    }
    for (size_t j = 0; j < sweep.size() / 2; ++j) {
      const size_t m = sweep.size() - 1 - j;
      asym = std::max(asym, std::abs(sweep[j].second - sweep[m].second) / sweep[m].second);
    }
    pass = pass && best == 18 && asym <= 0.005;  // node 18 is exactly pi/2
    detail += fmt("D=%g: argmax node %zu, asym %.3f%%  ", d_h, best, 100.0 * asym);
  }
  return {pass, detail + "(want node 18, asym <= 0.5%)"};
}

// ---- criterion 5: scan shape and optimizer agreement ----

Outcome criterion5() {
  Scenario scn = table1();
  const auto [lo, hi] = default_bounds(scn);

  auto area_at = [&scn](double d) {
    Scenario node = scn;
    node.site.horizontal_distance_m = d;
    node.site.orientation_rad = optimal_orientation();
    return coverage_area(node);
  };

  std::vector<double> areas(64);
  for (int i = 0; i < 64; ++i) {
    areas[static_cast<size_t>(i)] = area_at(lo + (hi - lo) * i / 63.0);
  }
  size_t peak = 0;
  for (size_t i = 1; i < areas.size(); ++i) {
    if (areas[i] > areas[peak]) peak = i;
  }
  bool shape_ok = peak > 0 && peak + 1 < areas.size();
  for (size_t i = 0; i + 1 < areas.size(); ++i) {
    if (i + 1 <= peak) {
      shape_ok = shape_ok && areas[i + 1] >= areas[i] * (1.0 - 1e-3);
    } else {
      shape_ok = shape_ok && areas[i + 1] <= areas[i] * (1.0 + 1e-3);
    }
  }

  const PlacementSolution sol = cma(scn, lo, hi);
  double dense_best = 0.0;
  for (int i = 0; i < 640; ++i) {
    dense_best = std::max(dense_best, area_at(lo + (hi - lo) * i / 639.0));
  }
  const bool optimizer_ok = sol.area_m2 >= dense_best * (1.0 - 1e-4);

  return {shape_ok && optimizer_ok,
          fmt("scan argmax at node %zu of 0..63 (interior rise/fall: %s), optimizer "
              "S*=%.1f vs dense-scan best %.1f (%s)",
              peak, shape_ok ? "ok" : "violated", sol.area_m2, dense_best,
              optimizer_ok ? "ok" : "mismatch")};
}

// ---- criterion 6: optimized placement dominates the baselines ----

Outcome criterion6() {
  bool pass = true;
  std::string detail;
  double previous_area = 0.0;
  for (int count : {15, 20, 25, 30}) {
    Scenario scn = table1(1.5);
    scn.panel.count_m = count;
    scn.panel.count_n = count;
    const auto [lo, hi] = default_bounds(scn);
    const PlacementSolution sol = cma(scn, lo, hi);

    auto area_of = [&scn](double d, double psi) {
      Scenario node = scn;
      node.site.horizontal_distance_m = d;
      node.site.orientation_rad = psi;
      return coverage_area(node);
    };

    const auto [bss_d, bss_psi] = baseline_bss(scn);
    const double bss_area = area_of(bss_d, bss_psi);
    double random_mean = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto [d, psi] = baseline_random(scn, seed, lo, hi);
      random_mean += area_of(d, psi);
    }
    random_mean /= 20.0;

    const bool node_ok = sol.area_m2 >= bss_area - 1e-6 &&
                         sol.area_m2 >= random_mean - 1e-6 &&
                         sol.area_m2 >= previous_area - 1e-6;
    pass = pass && node_ok;
    detail += fmt("M=%d: cma %.0f bss %.0f rand %.0f%s  ", count, sol.area_m2, bss_area,
                  random_mean, node_ok ? "" : " VIOLATED");
    previous_area = sol.area_m2;
  }
  return {pass, detail};
}

// ---- criterion 7: feasibility limit against the hand-derived value ----

Outcome criterion7() {
  const double limit = feasible_distance_limit(table1());
  return {std::abs(limit - 354.3) <= 0.1,
          fmt("limit %.4f m vs 354.3 m (tolerance 0.1 m)", limit)};
}

// ---- criterion 8: antiderivative of the plane-cap integrand ----

Outcome criterion8() {
  CaseRng rnd{20250808};
  double worst = 0.0;
  int checked = 0;
  while (checked < 100) {
    const double psi = rnd.uniform(0.3, kPi - 0.3);
    const double d_h = rnd.uniform(10.0, 300.0);
    SiteGeometry site;
    site.horizontal_distance_m = d_h;
    site.orientation_rad = psi;
    double phi;
    if (rnd.uniform(0.0, 1.0) < 0.5) {
      if (psi < 0.1) continue;
      phi = rnd.uniform(0.0, psi - 0.05);
    } else {
      if (kPi - psi < 0.1) continue;
      phi = rnd.uniform(psi + kPi + 0.05, kTwoPi);
    }
    auto antiderivative = [&](double x) {
      return 0.5 * d_h * d_h * std::sin(x) /
             (std::cos(x) - std::sin(x) * std::cos(psi) / std::sin(psi));
    };
    const double h = 1e-5;
    const double diff = (antiderivative(phi + h) - antiderivative(phi - h)) / (2.0 * h);
    const double l = boundary_ray_length(site, phi);
    worst = std::max(worst, std::abs(diff - 0.5 * l * l) / (0.5 * l * l));
    ++checked;
  }
  return {worst <= 1e-6, fmt("100 angles, max relative error %.2e (limit 1e-6)", worst)};
}

// ---- criterion 9: tangent cell degenerates to the direct circle ----

Outcome criterion9() {
  Scenario scn = table1();
  scn.panel.count_m = 0;
  scn.panel.count_n = 0;
  scn.site.horizontal_distance_m = feasible_distance_limit(scn);
  const double radius = scn.site.horizontal_distance_m;
  const double truth = kPi * radius * radius;

  const double analytic = coverage_area(scn);
  const McEstimate est = mc_coverage_area(scn, 100000, 0);
  const bool analytic_ok = std::abs(analytic - truth) / truth <= 0.005;
  const bool mc_ok = std::abs(est.area_m2 - truth) <= 3.0 * est.std_error_m2;
  return {analytic_ok && mc_ok,
          fmt("analytic off by %.2e rel (limit 5e-3), MC off by %.2f sigma (limit 3)",
              std::abs(analytic - truth) / truth,
              std::abs(est.area_m2 - truth) / est.std_error_m2)};
}

// ---- criterion 10: byte-identical outputs across thread counts ----

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(RISCOV_CLI_PATH) + " " + args + " > acc_stdout.txt 2> acc_stderr.txt";
  const int status = std::system(cmd.c_str());
  return status == -1 ? -1 : (WIFEXITED(status) ? WEXITSTATUS(status) : -1);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json stripped_json(const fs::path& path) {
  json j = json::parse(slurp(path));
  j.erase("generated_utc");
  return j;
}

Outcome criterion10() {
  const fs::path dir = "acceptance_tmp";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream scn(dir / "scenario.txt");
    scn << "panel.m = 6\npanel.n = 6\nsolver.n_phi = 48\n";
  }
  const std::string scenario = (dir / "scenario.txt").string();

  const std::string a = (dir / "a").string();
  const std::string b = (dir / "b").string();
  const std::string c = (dir / "c").string();
  if (run_cli("coverage --scenario " + scenario + " --threads 1 --out " + a) != 0 ||
      run_cli("coverage --scenario " + scenario + " --threads 2 --out " + b) != 0 ||
      run_cli("coverage --scenario " + scenario + " --threads 1 --out " + c) != 0) {
    return {false, "coverage command failed"};
  }
  const bool csv_ok =
      slurp(a + ".csv") == slurp(b + ".csv") && slurp(a + ".csv") == slurp(c + ".csv");
  const bool json_ok = stripped_json(a + ".json") == stripped_json(b + ".json");

  if (run_cli("verify --scenario " + scenario + " --samples 20000 --seed 7 --threads 1 --out " +
              a) != 0 ||
      run_cli("verify --scenario " + scenario + " --samples 20000 --seed 7 --threads 2 --out " +
              b) != 0) {
    return {false, "verify command failed"};
  }
  const bool verify_ok = stripped_json(a + ".json") == stripped_json(b + ".json");

  return {csv_ok && json_ok && verify_ok,
          fmt("coverage csv %s, coverage json %s, verify json %s",
              csv_ok ? "identical" : "DIFFERS", json_ok ? "identical" : "DIFFERS",
              verify_ok ? "identical" : "DIFFERS")};
}

struct Criterion {
  int id;
  const char* label;
  double time_limit_s;  // 0: no stated limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form SNR equals the coherent sum (common pathloss)", 1.0, criterion1},
      {2, "exact element-wise SNR within 1% of the closed form", 5.0, criterion2},
      {3, "analytic area within 2% of exact-mode Monte Carlo", 120.0, criterion3},
      {4, "orientation grid argmax at broadside, symmetric to 0.5%", 120.0, criterion4},
      {5, "distance scan rises to a single interior maximum; optimizer matches", 0.0,
       criterion5},
      {6, "optimized placement dominates BSS and random baselines", 0.0, criterion6},
      {7, "feasibility limit equals the hand-derived 354.3 m", 0.0, criterion7},
      {8, "plane-cap antiderivative identity to 1e-6", 0.0, criterion8},
      {9, "degenerate tangent cell recovers the direct circle", 0.0, criterion9},
      {10, "byte-identical outputs for any thread count", 0.0, criterion10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = outcome.pass;
    std::string note = outcome.detail;
    if (c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
      pass = false;
      note += fmt(" [exceeded %.0f s budget]", c.time_limit_s);
    }
    std::printf("[%s] criterion %2d: %s — %s [%.2f s]\n", pass ? "PASS" : "FAIL", c.id,
                c.label, note.c_str(), elapsed);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
