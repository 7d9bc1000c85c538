#include "placement.hpp"

#include <algorithm>
#include <cmath>

#include "coverage.hpp"
#include "rng.hpp"

namespace riscov {

namespace {

constexpr int kScanNodes = 64;
constexpr double kMinPlacementDistance = 1.0;

void clip_to_feasible(const Scenario& scn, double& lo, double& hi) {
  hi = std::min(hi, feasible_distance_limit(scn));
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw Error(Status::Infeasible, "empty feasible placement interval");
  }
}

}  // namespace

double optimal_orientation() { return kPi / 2.0; }

double fraunhofer_distance(const RisPanel& panel, double wavelength_m) {
  if (!(wavelength_m > 0.0)) {
    throw Error(Status::InvalidArgument, "wavelength must be positive");
  }
  const double aperture = panel.aperture_m();
  return 2.0 * aperture * aperture / wavelength_m;
}

std::pair<double, double> default_bounds(const Scenario& scn) {
  double lo = kMinPlacementDistance;
  double hi = feasible_distance_limit(scn);
  if (!(hi >= lo)) {
    throw Error(Status::Infeasible, "no feasible horizontal distance above 1 m");
  }
  return {lo, hi};
}

std::vector<std::pair<double, double>> orientation_sweep(const Scenario& scn,
                                                         std::vector<double> psi_grid) {
  std::sort(psi_grid.begin(), psi_grid.end());
  std::vector<std::pair<double, double>> result;
  result.reserve(psi_grid.size());
  Scenario node = scn;
  for (double psi : psi_grid) {
    if (!(psi > 0.0 && psi < kPi)) {
      throw Error(Status::InvalidArgument, "orientation grid node outside (0, pi)");
    }
    node.site.orientation_rad = psi;
    result.emplace_back(psi, coverage_area(node));
  }
  return result;
}

PlacementSolution optimize_horizontal_distance(const Scenario& base, double lo_m,
                                               double hi_m) {
  Scenario scn = base;
  scn.site.orientation_rad = optimal_orientation();
  clip_to_feasible(scn, lo_m, hi_m);

  long long evaluations = 0;
  double best_x = lo_m;
  double best_area = -1.0;
  auto area_at = [&](double d) {
    scn.site.horizontal_distance_m = d;
    ++evaluations;
    const double s = coverage_area(scn);
    if (s > best_area) {
      best_area = s;
      best_x = d;
    }
    return s;
  };

  // Coarse scan to locate the global bracket; unimodality is not assumed.
  std::vector<double> xs(kScanNodes), areas(kScanNodes);
  for (int i = 0; i < kScanNodes; ++i) {
    xs[static_cast<size_t>(i)] =
        kScanNodes == 1 ? lo_m : lo_m + (hi_m - lo_m) * i / (kScanNodes - 1);
    areas[static_cast<size_t>(i)] = area_at(xs[static_cast<size_t>(i)]);
  }
  int best_node = 0;
  for (int i = 1; i < kScanNodes; ++i) {
    if (areas[static_cast<size_t>(i)] > areas[static_cast<size_t>(best_node)]) best_node = i;
  }

  double a = xs[static_cast<size_t>(std::max(0, best_node - 1))];
  double b = xs[static_cast<size_t>(std::min(kScanNodes - 1, best_node + 1))];

  // Golden-section refinement on the bracket.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double tol_x = std::max(1e-6 * (hi_m - lo_m), 1e-9);
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = area_at(x1);
  double f2 = area_at(x2);
  while (b - a > tol_x) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = area_at(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = area_at(x1);
    }
  }
  area_at(0.5 * (a + b));

  PlacementSolution sol;
  sol.horizontal_distance_m = best_x;
  sol.orientation_rad = optimal_orientation();
  sol.area_m2 = best_area;
  sol.evaluations = evaluations;
  sol.bracket_lo_m = a;
  sol.bracket_hi_m = b;
  return sol;
}

PlacementSolution cma(const Scenario& scn, double lo_m, double hi_m) {
  return optimize_horizontal_distance(scn, lo_m, hi_m);
}

std::pair<double, double> baseline_random(const Scenario& scn, std::uint64_t seed,
                                          double lo_m, double hi_m) {
  clip_to_feasible(scn, lo_m, hi_m);
  const double d = lo_m + (hi_m - lo_m) * rng::uniform01(seed, 0);
  // Keep clear of the degenerate open endpoints of the orientation range.
  const double psi = kPi * (0.05 + 0.90 * rng::uniform01(seed, 1));
  return {d, psi};
}

std::pair<double, double> baseline_bss(const Scenario& scn) {
  const double d =
      std::max(kMinPlacementDistance, fraunhofer_distance(scn.panel, scn.radio.wavelength_m));
  return {d, optimal_orientation()};
}

}  // namespace riscov
