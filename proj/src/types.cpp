#include "types.hpp"

namespace riscov {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(Status::InvalidArgument, message);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void RadioConfig::validate() const {
  require(finite_positive(power_w), "radio: transmit power must be positive");
  require(finite_positive(noise_w), "radio: noise power must be positive");
  require(finite_positive(wavelength_m), "radio: wavelength must be positive");
  require(finite_positive(antenna_gain), "radio: antenna gain must be positive");
  require(finite_positive(pathloss_exponent), "radio: pathloss exponent must be positive");
  require(finite_positive(sensitivity), "radio: sensitivity must be positive");
  require(finite_positive(margin), "radio: margin must be positive");
  require(finite_positive(threshold), "radio: SNR threshold must be positive");
  // The threshold is the sensitivity-margin product; allow 0.01 dB of slack
  // for configs that state all three in rounded dB.
  const double derived_db = linear_to_db(sensitivity * margin);
  require(std::abs(linear_to_db(threshold) - derived_db) <= 0.01 + 1e-9,
          "radio: threshold must equal sensitivity * margin (within 0.01 dB)");
}

void RisPanel::validate() const {
  require(count_m >= 0 && count_n >= 0, "panel: element counts must be non-negative");
  require(finite_positive(element_width_m), "panel: element width must be positive");
  require(finite_positive(element_height_m), "panel: element height must be positive");
}

void SiteGeometry::validate() const {
  require(finite_positive(bs_height_m), "site: BS height must be positive");
  require(finite_positive(ue_height_m), "site: UE height must be positive");
  require(finite_positive(ris_height_m), "site: RIS height must be positive");
  require(finite_positive(horizontal_distance_m), "site: horizontal distance must be positive");
  require(std::isfinite(orientation_rad) && orientation_rad > 0.0 && orientation_rad < kPi,
          "site: orientation must lie strictly inside (0, pi)");
}

void UePolar::validate() const {
  require(std::isfinite(azimuth_rad), "ue: azimuth must be finite");
  require(std::isfinite(horizontal_distance_m) && horizontal_distance_m >= 0.0,
          "ue: horizontal distance must be non-negative");
}

void SolverConfig::validate() const {
  require(quad_intervals >= 2, "solver: quadrature level must be at least 2");
  require(std::isfinite(root_tol) && root_tol > 0.0 && root_tol <= 1e-3,
          "solver: root tolerance must lie in (0, 1e-3]");
  require(finite_positive(radius_ceiling_m), "solver: radius ceiling must be positive");
  require(boundary_samples >= 8, "solver: boundary sample count must be at least 8");
}

void Scenario::validate() const {
  radio.validate();
  panel.validate();
  site.validate();
  solver.validate();
  if (threads < 1) throw Error(Status::InvalidArgument, "threads must be at least 1");
}

}  // namespace riscov
