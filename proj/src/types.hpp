#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace riscov {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// dB/dBm only appear at configuration boundaries; all internal math is linear
// (watts and plain ratios).
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

// Status values shared with the C API and the CLI exit-code contract.
enum class Status : int {
  Ok = 0,
  InvalidArgument = 1,
  ParseFailure = 2,
  Infeasible = 3,
  SolverFailure = 4,
  VerifyMismatch = 5,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

// How the incidence angle treats the BS elevation seen from the panel:
// Full3d includes it, Horizontal projects everything into the ground plane.
enum class IncidenceMode { Full3d, Horizontal };

// Element magnitudes in the coherent channel sum: a single center-distance
// pathloss shared by all elements, or the exact per-element distances.
enum class PathlossMode { CommonPathloss, ExactElementwise };

// Link budget. Defaults are the standard simulation parameter set used
// throughout the test suite (noise -96 dBm, 36 dB threshold).
struct RadioConfig {
  double power_w = 2.0;
  double noise_w = dbm_to_watt(-96.0);
  double wavelength_m = 0.1;
  double antenna_gain = 1.0;
  double pathloss_exponent = 2.0;
  double sensitivity = db_to_linear(8.0);   // UE sensitivity, linear
  double margin = db_to_linear(28.0);       // penetration margin, linear
  double threshold = db_to_linear(36.0);    // = sensitivity * margin

  double snr_scale() const { return power_w / noise_w; }
  void validate() const;
};

// The reflecting panel: count_m x count_n elements, each
// element_width_m x element_height_m. Zero counts mean the panel is disabled
// and only the direct link remains.
struct RisPanel {
  int count_m = 25;
  int count_n = 25;
  double element_width_m = 0.04;
  double element_height_m = 0.04;

  double total_elements() const { return static_cast<double>(count_m) * count_n; }
  double aperture_m() const {
    return std::hypot(count_m * element_width_m, count_n * element_height_m);
  }
  void validate() const;
};

// Placement of BS, UE and panel. The panel is a vertical sheet whose ground
// trace passes through (horizontal_distance_m, 0) at angle orientation_rad
// from the BS->RIS direction; orientation_rad must stay inside (0, pi).
struct SiteGeometry {
  double bs_height_m = 35.0;
  double ue_height_m = 1.5;
  double ris_height_m = 2.0;
  double horizontal_distance_m = 100.0;
  double orientation_rad = kPi / 2.0;

  void validate() const;
};

// UE position in BS-centered polar coordinates, azimuth measured from the
// BS->RIS direction.
struct UePolar {
  double azimuth_rad = 0.0;
  double horizontal_distance_m = 0.0;

  void validate() const;
};

// Numerical knobs for the coverage solvers.
struct SolverConfig {
  int quad_intervals = 50;          // K nodes of the boundary quadrature
  double root_tol = 1e-9;           // relative tolerance on the SNR threshold
  double radius_ceiling_m = 1e4;    // initial bracket ceiling for the radius
  int boundary_samples = 720;       // sampled points of the polar boundary

  void validate() const;
};

// Everything a run needs; mirrors the scenario file.
struct Scenario {
  RadioConfig radio;
  RisPanel panel;
  SiteGeometry site;
  SolverConfig solver;
  IncidenceMode incidence_mode = IncidenceMode::Full3d;
  PathlossMode mc_mode = PathlossMode::ExactElementwise;
  int threads = 1;

  void validate() const;
};

struct EtaCoefficients {
  double eta_r = 0.0;  // coefficient of the reflected power term
  double eta_d = 0.0;  // coefficient of the direct power term
  double eta_x = 0.0;  // coefficient of the cross term
};

struct PhaseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  static PhaseMatrix zeros(int rows, int cols) {
    PhaseMatrix p;
    p.rows = rows;
    p.cols = cols;
    p.values.assign(static_cast<size_t>(rows) * cols, 0.0);
    return p;
  }
  double& at(int m, int n) { return values[static_cast<size_t>(m) * cols + n]; }
  double at(int m, int n) const { return values[static_cast<size_t>(m) * cols + n]; }
};

struct BoundarySample {
  double phi_rad = 0.0;
  double radius_m = 0.0;
  bool plane_limited = false;  // true when the RIS plane, not the SNR, caps the cell
};

struct Crossover {
  double phi_lower_rad = 0.0;
  double phi_upper_rad = 0.0;
  // Sign changes beyond the expected single crossing per side; nonzero values
  // flag configurations where the boundary comparison is not two-crossing.
  int extra_sign_changes = 0;
};

struct CoverageBoundary {
  double phi_lower_rad = 0.0;
  double phi_upper_rad = 0.0;
  std::vector<BoundarySample> samples;
  double area_m2 = 0.0;
  int extra_sign_changes = 0;
};

struct PlacementSolution {
  double horizontal_distance_m = 0.0;
  double orientation_rad = 0.0;
  double area_m2 = 0.0;
  long long evaluations = 0;
  double bracket_lo_m = 0.0;
  double bracket_hi_m = 0.0;
};

struct McEstimate {
  double area_m2 = 0.0;
  double std_error_m2 = 0.0;
  long long n_samples = 0;
  long long n_inside = 0;
  std::uint64_t seed = 0;
  double sampling_radius_m = 0.0;
};

}  // namespace riscov
