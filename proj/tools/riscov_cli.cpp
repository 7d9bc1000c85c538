// riscov command line: coverage boundaries, parameter sweeps, placement
// optimization and Monte Carlo verification, driven entirely through the
// shared library's C interface.
//
// Exit codes: 0 ok, 2 scenario/usage parse error, 3 infeasible configuration,
// 4 solver failure, 5 verification mismatch.
#include <riscov.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct ScenarioDeleter {
  void operator()(riscov_scenario* sc) const { riscov_scenario_free(sc); }
};
using ScenarioHandle = std::unique_ptr<riscov_scenario, ScenarioDeleter>;

struct BoundaryDeleter {
  void operator()(riscov_boundary* b) const { riscov_boundary_free(b); }
};
using BoundaryHandle = std::unique_ptr<riscov_boundary, BoundaryDeleter>;

struct CommonOpts {
  std::string scenario_path;
  std::string out;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: keep the scenario's value
  bool degrees = false;
  std::string mode;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--scenario", opts.scenario_path, "Scenario file (defaults when omitted)");
  cmd->add_option("--out", opts.out, "Output base path (suffixes .csv/.json are derived)");
  cmd->add_option("--seed", opts.seed, "Seed for randomized paths (default 0)");
  cmd->add_option("--threads", opts.threads, "Worker threads; results do not depend on it")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--degrees", opts.degrees, "Angles in CLI input/output are degrees");
  cmd->add_option("--mode", opts.mode, "Monte Carlo magnitudes: common | exact")
      ->check(CLI::IsMember({"common", "exact"}));
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int fail(const riscov_scenario* sc, int status) {
  std::cerr << "error: " << riscov_errmsg(sc) << "\n";
  return status;
}

ScenarioHandle make_scenario(const CommonOpts& opts, int& status) {
  riscov_scenario* raw = nullptr;
  status = opts.scenario_path.empty() ? riscov_scenario_default(&raw)
                                      : riscov_scenario_open(opts.scenario_path.c_str(), &raw);
  ScenarioHandle sc(raw);
  if (status != RISCOV_OK) return sc;
  if (!opts.mode.empty()) {
    status = riscov_scenario_set_str(sc.get(), "solver.mc_mode", opts.mode.c_str());
    if (status != RISCOV_OK) return sc;
  }
  if (opts.threads > 0) {
    status = riscov_scenario_set(sc.get(), "solver.threads", opts.threads);
  }
  return sc;
}

json scenario_echo_json(riscov_scenario* sc) {
  size_t needed = 0;
  riscov_scenario_echo(sc, nullptr, 0, &needed);
  std::string text(needed, '\0');
  riscov_scenario_echo(sc, text.data(), text.size(), &needed);
  text.resize(needed > 0 ? needed - 1 : 0);
  json echo = json::object();
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const size_t eq = line.find(" = ");
    if (eq != std::string::npos) echo[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return echo;
}

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

json base_summary(const char* command, riscov_scenario* sc) {
  json j;
  j["schema_version"] = RISCOV_SCHEMA_VERSION;
  j["tool_version"] = riscov_version();
  j["command"] = command;
  j["generated_utc"] = timestamp_utc();
  j["scenario"] = scenario_echo_json(sc);
  return j;
}

struct OutPaths {
  std::string csv;
  std::string json_path;
};

OutPaths out_paths(const CommonOpts& opts, const std::string& default_base) {
  std::string base = opts.out.empty() ? default_base : opts.out;
  auto ends_with = [](const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(base, ".csv")) {
    const std::string stem = base.substr(0, base.size() - 4);
    return {base, stem + ".json"};
  }
  if (ends_with(base, ".json")) {
    const std::string stem = base.substr(0, base.size() - 5);
    return {stem + ".csv", base};
  }
  return {base + ".csv", base + ".json"};
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

int emit(const OutPaths& paths, const std::optional<std::string>& csv, const json& summary) {
  if (csv && !write_file(paths.csv, *csv)) {
    std::cerr << "error: cannot write " << paths.csv << "\n";
    return 1;
  }
  const std::string text = summary.dump(2) + "\n";
  if (!write_file(paths.json_path, text)) {
    std::cerr << "error: cannot write " << paths.json_path << "\n";
    return 1;
  }
  std::cout << text;
  return 0;
}

double angle_out(double rad, bool degrees) { return degrees ? rad * 180.0 / kPi : rad; }
double angle_in(double value, bool degrees) { return degrees ? value * kPi / 180.0 : value; }

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
};

bool parse_grid(const std::string& text, Grid& grid) {
  char extra = 0;
  const int got = std::sscanf(text.c_str(), "%lf:%lf:%d%c", &grid.lo, &grid.hi, &grid.count, &extra);
  return got == 3 && grid.count >= 1 && grid.hi >= grid.lo;
}

int run_coverage(const CommonOpts& opts) {
  int status = 0;
  ScenarioHandle sc = make_scenario(opts, status);
  if (status != RISCOV_OK) return fail(sc.get(), status);

  riscov_boundary* raw = nullptr;
  status = riscov_coverage(sc.get(), &raw);
  BoundaryHandle boundary(raw);
  if (status != RISCOV_OK) return fail(sc.get(), status);

  std::string csv = opts.degrees ? "phi_deg,c_m,branch\n" : "phi_rad,c_m,branch\n";
  const size_t n = riscov_boundary_samples(boundary.get());
  for (size_t i = 0; i < n; ++i) {
    double phi = 0.0, radius = 0.0;
    int plane_limited = 0;
    riscov_boundary_sample(boundary.get(), i, &phi, &radius, &plane_limited);
    csv += fmt(angle_out(phi, opts.degrees));
    csv += ',';
    csv += fmt(radius);
    csv += ',';
    csv += plane_limited ? "l" : "dth";
    csv += '\n';
  }

  json summary = base_summary("coverage", sc.get());
  const char* unit = opts.degrees ? "deg" : "rad";
  summary["angle_unit"] = unit;
  summary[opts.degrees ? "phi_l_deg" : "phi_l_rad"] =
      angle_out(riscov_boundary_phi_lower(boundary.get()), opts.degrees);
  summary[opts.degrees ? "phi_u_deg" : "phi_u_rad"] =
      angle_out(riscov_boundary_phi_upper(boundary.get()), opts.degrees);
  summary["area_m2"] = riscov_boundary_area(boundary.get());
  summary["boundary_samples"] = n;
  summary["extra_sign_changes"] = riscov_boundary_extra_sign_changes(boundary.get());

  return emit(out_paths(opts, "riscov_coverage"), csv, summary);
}

int run_sweep(const CommonOpts& opts, const std::string& axis, const std::string& grid_text) {
  Grid grid;
  if (!parse_grid(grid_text, grid)) {
    std::cerr << "error: --grid expects lo:hi:count\n";
    return 2;
  }

  int status = 0;
  ScenarioHandle sc = make_scenario(opts, status);
  if (status != RISCOV_OK) return fail(sc.get(), status);
  json summary = base_summary("sweep", sc.get());  // echo before grid mutation

  std::string key;
  if (axis == "orientation") {
    key = "site.orientation_rad";
  } else if (axis == "distance") {
    key = "site.distance_m";
  } else if (axis == "elements") {
    key = "panel.m";
  } else if (axis == "power") {
    key = "radio.power_w";
  } else {
    std::cerr << "error: --axis must be orientation|distance|elements|power\n";
    return 2;
  }

  std::string csv = "x,area_m2\n";
  int infeasible_nodes = 0;
  for (int i = 0; i < grid.count; ++i) {
    double x = grid.count == 1 ? grid.lo : grid.lo + (grid.hi - grid.lo) * i / (grid.count - 1);
    double value = x;
    if (axis == "orientation") value = angle_in(x, opts.degrees);
    if (axis == "elements") value = std::round(x);

    status = riscov_scenario_set(sc.get(), key.c_str(), value);
    if (status == RISCOV_OK && axis == "elements") {
      status = riscov_scenario_set(sc.get(), "panel.n", value);
    }
    if (status != RISCOV_OK) return fail(sc.get(), status);

    double area = 0.0;
    status = riscov_coverage_area(sc.get(), &area);
    csv += fmt(axis == "elements" ? value : x);
    csv += ',';
    if (status == RISCOV_OK) {
      csv += fmt(area);
    } else if (status == RISCOV_ERR_INFEASIBLE) {
      ++infeasible_nodes;
    } else {
      return fail(sc.get(), status);
    }
    csv += '\n';
  }

  summary["axis"] = axis;
  summary["grid"] = {{"lo", grid.lo}, {"hi", grid.hi}, {"count", grid.count}};
  summary["infeasible_nodes"] = infeasible_nodes;
  if (infeasible_nodes > 0) {
    std::cerr << "warning: " << infeasible_nodes << " grid node(s) infeasible, emitted empty\n";
  }
  return emit(out_paths(opts, "riscov_sweep"), csv, summary);
}

int run_optimize(const CommonOpts& opts, const std::string& bounds_text) {
  int status = 0;
  ScenarioHandle sc = make_scenario(opts, status);
  if (status != RISCOV_OK) return fail(sc.get(), status);
  json summary = base_summary("optimize", sc.get());  // echo before baseline mutation

  double lo = 0.0, hi = 0.0;
  status = riscov_default_bounds(sc.get(), &lo, &hi);
  if (status != RISCOV_OK) return fail(sc.get(), status);
  if (!bounds_text.empty()) {
    char extra = 0;
    if (std::sscanf(bounds_text.c_str(), "%lf:%lf%c", &lo, &hi, &extra) != 2) {
      std::cerr << "error: --bounds expects lo:hi\n";
      return 2;
    }
  }

  riscov_placement sol{};
  status = riscov_optimize(sc.get(), lo, hi, &sol);
  if (status != RISCOV_OK) return fail(sc.get(), status);

  // Baseline placements evaluated with the same area routine.
  auto area_of_placement = [&](double d, double psi, double& area) {
    int rc = riscov_scenario_set(sc.get(), "site.distance_m", d);
    if (rc == RISCOV_OK) rc = riscov_scenario_set(sc.get(), "site.orientation_rad", psi);
    if (rc == RISCOV_OK) rc = riscov_coverage_area(sc.get(), &area);
    return rc;
  };

  const char* psi_key = opts.degrees ? "psi_deg" : "psi_rad";
  json baselines;
  double bss_d = 0.0, bss_psi = 0.0;
  status = riscov_baseline_bss(sc.get(), &bss_d, &bss_psi);
  if (status != RISCOV_OK) return fail(sc.get(), status);
  double rand_d = 0.0, rand_psi = 0.0;
  status = riscov_baseline_random(sc.get(), opts.seed, lo, hi, &rand_d, &rand_psi);
  if (status != RISCOV_OK) return fail(sc.get(), status);

  double bss_area = 0.0;
  baselines["bss"] = {{"d_h_m", bss_d}, {psi_key, angle_out(bss_psi, opts.degrees)}};
  baselines["bss"]["area_m2"] =
      area_of_placement(bss_d, bss_psi, bss_area) == RISCOV_OK ? json(bss_area) : json(nullptr);
  double rand_area = 0.0;
  baselines["random"] = {{"seed", opts.seed},
                         {"d_h_m", rand_d},
                         {psi_key, angle_out(rand_psi, opts.degrees)}};
  baselines["random"]["area_m2"] =
      area_of_placement(rand_d, rand_psi, rand_area) == RISCOV_OK ? json(rand_area) : json(nullptr);

  summary["bounds_m"] = {lo, hi};
  summary["d_h_star_m"] = sol.d_h_star_m;
  summary[opts.degrees ? "psi_star_deg" : "psi_star_rad"] =
      angle_out(sol.psi_star_rad, opts.degrees);
  summary["area_star_m2"] = sol.area_star_m2;
  summary["evaluations"] = sol.evaluations;
  summary["bracket_m"] = {sol.bracket_lo_m, sol.bracket_hi_m};
  summary["baselines"] = baselines;
  summary["rng"] = riscov_rng_algorithm();
  return emit(out_paths(opts, "riscov_optimize"), std::nullopt, summary);
}

int run_verify(const CommonOpts& opts, long long n_samples) {
  int status = 0;
  ScenarioHandle sc = make_scenario(opts, status);
  if (status != RISCOV_OK) return fail(sc.get(), status);

  double analytic = 0.0;
  status = riscov_coverage_area(sc.get(), &analytic);
  if (status != RISCOV_OK) return fail(sc.get(), status);

  riscov_mc_estimate est{};
  status = riscov_mc_area(sc.get(), n_samples, opts.seed, &est);
  if (status != RISCOV_OK) return fail(sc.get(), status);

  const double gap = (est.area_m2 - analytic) / analytic;
  const double tolerance = std::max(0.02, 3.0 * est.std_error_m2 / analytic);
  const bool pass = std::abs(gap) <= tolerance;

  json summary = base_summary("verify", sc.get());
  summary["analytic_area_m2"] = analytic;
  summary["mc"] = {{"area_m2", est.area_m2},
                   {"std_error_m2", est.std_error_m2},
                   {"n_samples", est.n_samples},
                   {"n_inside", est.n_inside},
                   {"seed", est.seed},
                   {"sampling_radius_m", est.sampling_radius_m},
                   {"rng", riscov_rng_algorithm()}};
  summary["relative_gap"] = gap;
  summary["tolerance"] = tolerance;
  summary["pass"] = pass;

  const int rc = emit(out_paths(opts, "riscov_verify"), std::nullopt, summary);
  if (rc != 0) return rc;
  if (!pass) {
    std::cerr << "error: analytic and Monte Carlo areas disagree beyond tolerance\n";
    return RISCOV_ERR_MISMATCH;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"riscov: coverage analysis of a RIS-assisted downlink cell"};
  app.require_subcommand(1);

  CommonOpts coverage_opts, sweep_opts, optimize_opts, verify_opts;
  std::string axis, grid_text, bounds_text;
  long long n_samples = 100000;

  CLI::App* coverage = app.add_subcommand(
      "coverage",
      "Polar cell boundary and area (SNR samples within 0.1 m of the mast "
      "are evaluated at 0.1 m)");
  add_common(coverage, coverage_opts);

  CLI::App* sweep = app.add_subcommand("sweep", "Coverage area across a parameter grid");
  add_common(sweep, sweep_opts);
  sweep->add_option("--axis", axis, "orientation | distance | elements | power")->required();
  sweep->add_option("--grid", grid_text, "Grid as lo:hi:count")->required();

  CLI::App* optimize = app.add_subcommand("optimize", "Placement optimization with baselines");
  add_common(optimize, optimize_opts);
  optimize->add_option("--bounds", bounds_text, "Distance bounds as lo:hi (default feasible)");

  CLI::App* verify = app.add_subcommand("verify", "Monte Carlo check of the analytic area");
  add_common(verify, verify_opts);
  verify->add_option("--samples", n_samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (coverage->parsed()) return run_coverage(coverage_opts);
  if (sweep->parsed()) return run_sweep(sweep_opts, axis, grid_text);
  if (optimize->parsed()) return run_optimize(optimize_opts, bounds_text);
  if (verify->parsed()) return run_verify(verify_opts, n_samples);
  return 2;
}
