#include "coverage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "channel.hpp"
#include "geometry.hpp"
#include "parallel.hpp"

namespace riscov {

namespace {

constexpr double kMinSampleDistance = 0.1;      // floor for d_bu_h samples
constexpr double kBracketGrowthCap = 1048576.0; // 2^20 growth of the radius bracket
constexpr int kCrossoverScanNodes = 64;
constexpr int kMaxRootIterations = 200;

// Precomputed field coefficients so the root-finders do not redo the eta
// algebra on every evaluation.
struct Field {
  double eta_r_mn2 = 0.0;  // eta_r * (MN)^2
  double eta_d = 0.0;
  double eta_x_mn = 0.0;   // eta_x * MN
  double gain = 0.0;
  double alpha = 0.0;
  double bs_ris_pow = 0.0;  // D^alpha of the 3-D BS-RIS distance
  double d_h = 0.0;
  double dz_ris_ue = 0.0;
  double dz_bs_ue = 0.0;

  double pathloss(double phi, double d_bu_h) const {
    const double dx = d_h - d_bu_h * std::cos(phi);
    const double dy = d_bu_h * std::sin(phi);
    const double sq = dx * dx + dy * dy + dz_ris_ue * dz_ris_ue;
    return gain / (bs_ris_pow * std::pow(sq, 0.5 * alpha));
  }

  double operator()(double phi, double d_bu_h) const {
    const double d_eff = std::max(d_bu_h, kMinSampleDistance);
    const double pl = pathloss(phi, d_eff);
    const double d_bu2 = d_eff * d_eff + dz_bs_ue * dz_bs_ue;
    return eta_r_mn2 * pl + eta_d / d_bu2 + eta_x_mn * std::sqrt(pl) / std::sqrt(d_bu2);
  }
};

Field make_field(const Scenario& scn) {
  const EtaCoefficients eta = eta_coefficients(
      scn.radio, scn.panel, incidence_angle(scn.site, scn.incidence_mode));
  const double mn = scn.panel.total_elements();
  Field f;
  f.eta_r_mn2 = eta.eta_r * mn * mn;
  f.eta_d = eta.eta_d;
  f.eta_x_mn = eta.eta_x * mn;
  f.gain = scn.radio.antenna_gain;
  f.alpha = scn.radio.pathloss_exponent;
  f.bs_ris_pow = std::pow(bs_ris_distance(scn.site), f.alpha);
  f.d_h = scn.site.horizontal_distance_m;
  f.dz_ris_ue = scn.site.ris_height_m - scn.site.ue_height_m;
  f.dz_bs_ue = scn.site.bs_height_m - scn.site.ue_height_m;
  return f;
}

void require_feasible(const Scenario& scn) {
  if (!feasibility_check(scn)) {
    throw Error(Status::Infeasible,
                "direct link falls below the SNR threshold at the RIS foot; "
                "reduce the horizontal distance or raise the link budget");
  }
}

// Threshold crossing of the field along direction phi: Illinois-damped false
// position on a bracket that always contains the root.
double solve_radius(const Field& field, const Scenario& scn, double phi) {
  const double threshold = scn.radio.threshold;
  const double tol = scn.solver.root_tol * threshold;
  double a = scn.site.horizontal_distance_m;
  double fa = field(phi, a) - threshold;
  if (fa <= tol) return a;  // boundary sits at the RIS foot (limit geometry)

  double b = std::max(scn.solver.radius_ceiling_m, 2.0 * a);
  double fb = field(phi, b) - threshold;
  while (fb >= 0.0) {
    b *= 2.0;
    if (b > kBracketGrowthCap * a) {
      throw Error(Status::SolverFailure,
                  "coverage radius bracket exceeded its expansion cap");
    }
    fb = field(phi, b) - threshold;
  }

  int last_side = 0;
  for (int i = 0; i < kMaxRootIterations; ++i) {
    double m = b - fb * (b - a) / (fb - fa);
    if (!(m > a && m < b)) m = 0.5 * (a + b);
    const double fm = field(phi, m) - threshold;
    if (std::abs(fm) <= tol || (b - a) <= 8.0 * std::numeric_limits<double>::epsilon() * b) {
      return m;
    }
    if (fm > 0.0) {
      if (last_side == 1) fb *= 0.5;
      a = m;
      fa = fm;
      last_side = 1;
    } else {
      if (last_side == -1) fa *= 0.5;
      b = m;
      fb = fm;
      last_side = -1;
    }
  }
  throw Error(Status::SolverFailure, "coverage radius search did not converge");
}

double ray_length(const Scenario& scn, double phi) {
  return boundary_ray_length(scn.site, phi);
}

// Compactified comparison of the two boundaries; positive where the SNR
// boundary lies beyond the RIS plane.
double boundary_gap(const Field& field, const Scenario& scn, double phi) {
  return std::atan(solve_radius(field, scn, phi)) - std::atan(ray_length(scn, phi));
}

// Bisect a sign change of boundary_gap down to angle resolution.
double bisect_crossing(const Field& field, const Scenario& scn, double pos, double neg) {
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (pos + neg);
    if (mid == pos || mid == neg) break;
    if (boundary_gap(field, scn, mid) > 0.0) {
      pos = mid;
    } else {
      neg = mid;
    }
    if (std::abs(pos - neg) < 1e-13 * std::max(1.0, std::abs(pos))) break;
  }
  return 0.5 * (pos + neg);
}

Crossover find_crossovers(const Field& field, const Scenario& scn) {
  const double psi = scn.site.orientation_rad;
  Crossover result;

  // Lower side, scanning [0, psi). The gap starts non-negative at phi = 0 and
  // diverges to -inf at the plane direction.
  {
    const double pole_margin = psi * 1e-9;
    const double top = psi - pole_margin;
    double prev_phi = 0.0;
    double prev_gap = boundary_gap(field, scn, 0.0);
    if (prev_gap < -1e-9) {
      throw Error(Status::SolverFailure,
                  "boundary comparison negative toward the RIS: feasibility "
                  "should preclude this");
    }
    if (prev_gap <= 0.0) {
      result.phi_lower_rad = 0.0;
    } else {
      bool found = false;
      int changes = 0;
      for (int j = 1; j <= kCrossoverScanNodes; ++j) {
        const double phi = top * j / kCrossoverScanNodes;
        const double gap = boundary_gap(field, scn, phi);
        if ((prev_gap > 0.0) != (gap > 0.0)) {
          ++changes;
          if (!found) {
            result.phi_lower_rad = gap > 0.0 ? bisect_crossing(field, scn, phi, prev_phi)
                                             : bisect_crossing(field, scn, prev_phi, phi);
            found = true;
          }
        }
        prev_phi = phi;
        prev_gap = gap;
      }
      if (!found) {
        throw Error(Status::SolverFailure,
                    "no boundary crossing found below the RIS plane direction");
      }
      result.extra_sign_changes += changes - 1;
    }
  }

  // Upper side, scanning down from 2*pi to psi + pi. Mirror of the lower
  // side: non-negative at 2*pi, diverges at the plane direction.
  {
    const double span = kPi - psi;
    const double pole_margin = span * 1e-9;
    const double bottom = psi + kPi + pole_margin;
    double prev_phi = kTwoPi;
    double prev_gap = boundary_gap(field, scn, kTwoPi);
    if (prev_gap < -1e-9) {
      throw Error(Status::SolverFailure,
                  "boundary comparison negative toward the RIS: feasibility "
                  "should preclude this");
    }
    if (prev_gap <= 0.0) {
      result.phi_upper_rad = kTwoPi;
    } else {
      bool found = false;
      int changes = 0;
      for (int j = 1; j <= kCrossoverScanNodes; ++j) {
        const double phi = kTwoPi - (kTwoPi - bottom) * j / kCrossoverScanNodes;
        const double gap = boundary_gap(field, scn, phi);
        if ((prev_gap > 0.0) != (gap > 0.0)) {
          ++changes;
          if (!found) {
            result.phi_upper_rad = gap > 0.0 ? bisect_crossing(field, scn, phi, prev_phi)
                                             : bisect_crossing(field, scn, prev_phi, phi);
            found = true;
          }
        }
        prev_phi = phi;
        prev_gap = gap;
      }
      if (!found) {
        throw Error(Status::SolverFailure,
                    "no boundary crossing found above the RIS plane direction");
      }
      result.extra_sign_changes += changes - 1;
    }
  }

  return result;
}

double area_between(const Field& field, const Scenario& scn, const Crossover& cross) {
  const int k = scn.solver.quad_intervals;
  const double lo = cross.phi_lower_rad;
  const double hi = cross.phi_upper_rad;
  const double step = (hi - lo) / k;

  std::vector<double> radius(static_cast<size_t>(k) + 1);
  parallel_for(k + 1, scn.threads, [&](long long i) {
    radius[static_cast<size_t>(i)] = solve_radius(field, scn, lo + step * i);
  });

  double integral = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double w = (i == 0 || i == k) ? 0.5 : 1.0;
    integral += w * 0.5 * radius[static_cast<size_t>(i)] * radius[static_cast<size_t>(i)];
  }
  integral *= step;

  const double triangle =
      0.5 * std::sin(lo - hi) * ray_length(scn, lo) * ray_length(scn, hi);
  return integral + triangle;
}

}  // namespace

double ris_pathloss(const Scenario& scn, double phi_rad, double d_bu_h_m) {
  if (!(d_bu_h_m >= 0.0)) {
    throw Error(Status::InvalidArgument, "horizontal distance must be non-negative");
  }
  return make_field(scn).pathloss(phi_rad, d_bu_h_m);
}

double snr_field(const Scenario& scn, double phi_rad, double d_bu_h_m) {
  if (!(d_bu_h_m >= 0.0)) {
    throw Error(Status::InvalidArgument, "horizontal distance must be non-negative");
  }
  if (d_bu_h_m == 0.0 && scn.site.bs_height_m == scn.site.ue_height_m) {
    throw Error(Status::InvalidArgument,
                "SNR field is singular at zero separation with equal heights");
  }
  return make_field(scn)(phi_rad, d_bu_h_m);
}

bool feasibility_check(const Scenario& scn) {
  const EtaCoefficients eta = eta_coefficients(
      scn.radio, scn.panel, incidence_angle(scn.site, scn.incidence_mode));
  const double d_h = scn.site.horizontal_distance_m;
  const double dz = scn.site.bs_height_m - scn.site.ue_height_m;
  const double direct = eta.eta_d / (d_h * d_h + dz * dz);
  return direct >= scn.radio.threshold * (1.0 - 1e-12);
}

double feasible_distance_limit(const Scenario& scn) {
  const EtaCoefficients eta = eta_coefficients(
      scn.radio, scn.panel, incidence_angle(scn.site, scn.incidence_mode));
  const double dz = scn.site.bs_height_m - scn.site.ue_height_m;
  const double sq = eta.eta_d / scn.radio.threshold - dz * dz;
  return sq > 0.0 ? std::sqrt(sq) : 0.0;
}

double coverage_radius(const Scenario& scn, double phi_rad) {
  require_feasible(scn);
  return solve_radius(make_field(scn), scn, phi_rad);
}

Crossover crossover_angles(const Scenario& scn) {
  require_feasible(scn);
  return find_crossovers(make_field(scn), scn);
}

CoverageBoundary coverage_profile(const Scenario& scn) {
  require_feasible(scn);
  const Field field = make_field(scn);
  const Crossover cross = find_crossovers(field, scn);
  const double psi = scn.site.orientation_rad;

  CoverageBoundary boundary;
  boundary.phi_lower_rad = cross.phi_lower_rad;
  boundary.phi_upper_rad = cross.phi_upper_rad;
  boundary.extra_sign_changes = cross.extra_sign_changes;
  boundary.samples.resize(static_cast<size_t>(scn.solver.boundary_samples));

  parallel_for(scn.solver.boundary_samples, scn.threads, [&](long long i) {
    const double phi = kTwoPi * i / scn.solver.boundary_samples;
    const double snr_limit = solve_radius(field, scn, phi);
    BoundarySample& s = boundary.samples[static_cast<size_t>(i)];
    s.phi_rad = phi;
    const bool plane_applies = phi < psi || phi > psi + kPi;
    s.radius_m = plane_applies ? std::min(snr_limit, ray_length(scn, phi)) : snr_limit;
    s.plane_limited = !(phi > cross.phi_lower_rad && phi < cross.phi_upper_rad);
  });

  boundary.area_m2 = area_between(field, scn, cross);
  return boundary;
}

double coverage_area(const Scenario& scn) {
  require_feasible(scn);
  const Field field = make_field(scn);
  return area_between(field, scn, find_crossovers(field, scn));
}

}  // namespace riscov
