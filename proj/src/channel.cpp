#include "channel.hpp"

#include <algorithm>

namespace riscov {

namespace {

void require_positive_distance(double d, const char* what) {
  if (!(d > 0.0)) {
    throw Error(Status::InvalidArgument, std::string(what) + " must be positive");
  }
}

}  // namespace

double reflection_amplitude(const SiteGeometry& site, IncidenceMode mode) {
  return std::clamp(std::cos(incidence_angle(site, mode)), 0.0, 1.0);
}

Vec3 element_position(const RisPanel& panel, const SiteGeometry& site, int m, int n) {
  const double along = (m - (panel.count_m - 1) / 2.0) * panel.element_width_m;
  const double up = (n - (panel.count_n - 1) / 2.0) * panel.element_height_m;
  const double psi = site.orientation_rad;
  return {site.horizontal_distance_m + along * std::cos(psi), along * std::sin(psi),
          site.ris_height_m + up};
}

std::complex<double> element_channel_gain(const RadioConfig& radio, const RisPanel& panel,
                                          double bs_element_m, double element_ue_m) {
  require_positive_distance(bs_element_m, "BS-element distance");
  require_positive_distance(element_ue_m, "element-UE distance");
  const double mag =
      radio.wavelength_m *
      std::sqrt(radio.antenna_gain * panel.element_width_m * panel.element_height_m) /
      (std::pow(4.0 * kPi, 1.5) *
       std::pow(bs_element_m * element_ue_m, 0.5 * radio.pathloss_exponent));
  const double phase =
      wrap_angle(-kTwoPi / radio.wavelength_m * (bs_element_m + element_ue_m));
  return std::polar(mag, phase);
}

std::complex<double> direct_channel_gain(const RadioConfig& radio, double bs_ue_m) {
  require_positive_distance(bs_ue_m, "BS-UE distance");
  const double mag =
      radio.wavelength_m * std::sqrt(radio.antenna_gain) / (4.0 * kPi * bs_ue_m);
  const double phase = wrap_angle(-kTwoPi / radio.wavelength_m * bs_ue_m);
  return std::polar(mag, phase);
}

PhaseMatrix optimal_phases(const RadioConfig& radio, const RisPanel& panel,
                           const SiteGeometry& site, const UePolar& ue) {
  PhaseMatrix phases = PhaseMatrix::zeros(panel.count_m, panel.count_n);
  const double k = kTwoPi / radio.wavelength_m;
  const Vec3 bs = bs_position(site);
  const Vec3 up = ue_position(site, ue);
  const double d_bu = bs_ue_distance(site, ue);
  for (int m = 0; m < panel.count_m; ++m) {
    for (int n = 0; n < panel.count_n; ++n) {
      const Vec3 e = element_position(panel, site, m, n);
      phases.at(m, n) = wrap_angle(k * (d_bu - distance(bs, e) - distance(up, e)));
    }
  }
  return phases;
}

std::complex<double> composite_channel(const RadioConfig& radio, const RisPanel& panel,
                                       const SiteGeometry& site, const UePolar& ue,
                                       const PhaseMatrix& phases, PathlossMode mode,
                                       IncidenceMode incidence) {
  if (phases.rows != panel.count_m || phases.cols != panel.count_n) {
    throw Error(Status::InvalidArgument, "phase matrix does not match the panel layout");
  }
  const double gamma = reflection_amplitude(site, incidence);
  const double k = kTwoPi / radio.wavelength_m;
  const Vec3 bs = bs_position(site);
  const Vec3 up = ue_position(site, ue);

  double common_mag = 0.0;
  if (mode == PathlossMode::CommonPathloss && panel.count_m > 0 && panel.count_n > 0) {
    common_mag = std::abs(
        element_channel_gain(radio, panel, bs_ris_distance(site), ue_ris_distance(site, ue)));
  }

  std::complex<double> sum{0.0, 0.0};
  for (int m = 0; m < panel.count_m; ++m) {
    for (int n = 0; n < panel.count_n; ++n) {
      const Vec3 e = element_position(panel, site, m, n);
      const double bs_e = distance(bs, e);
      const double e_ue = distance(up, e);
      const double mag = mode == PathlossMode::CommonPathloss
                             ? common_mag
                             : std::abs(element_channel_gain(radio, panel, bs_e, e_ue));
      // Reflection coefficient gamma * exp(-j phase) applied to the path gain.
      sum += std::polar(gamma * mag, -(phases.at(m, n) + k * (bs_e + e_ue)));
    }
  }
  return sum + direct_channel_gain(radio, bs_ue_distance(site, ue));
}

double snr(const RadioConfig& radio, std::complex<double> h) {
  return radio.snr_scale() * std::norm(h);
}

EtaCoefficients eta_coefficients(const RadioConfig& radio, const RisPanel& panel,
                                 double theta_i_rad) {
  if (!(theta_i_rad >= 0.0 && theta_i_rad <= kPi / 2.0)) {
    throw Error(Status::InvalidArgument, "incidence angle must lie in [0, pi/2]");
  }
  const double scale = radio.snr_scale();
  const double lambda2 = radio.wavelength_m * radio.wavelength_m;
  const double cos_t = std::max(std::cos(theta_i_rad), 0.0);
  const double elem_area = panel.element_width_m * panel.element_height_m;
  EtaCoefficients eta;
  eta.eta_r = scale * lambda2 / std::pow(4.0 * kPi, 3.0) * cos_t * cos_t * elem_area;
  eta.eta_d = scale * lambda2 * radio.antenna_gain / std::pow(4.0 * kPi, 2.0);
  eta.eta_x = 2.0 * scale * lambda2 * std::sqrt(radio.antenna_gain) /
              std::pow(4.0 * kPi, 2.5) * cos_t * std::sqrt(elem_area);
  return eta;
}

double max_snr_closed_form(const EtaCoefficients& eta, const RisPanel& panel,
                           double ris_pathloss, double bs_ue_m) {
  if (!(ris_pathloss >= 0.0)) {
    throw Error(Status::InvalidArgument, "reflected pathloss must be non-negative");
  }
  require_positive_distance(bs_ue_m, "BS-UE distance");
  const double mn = panel.total_elements();
  return eta.eta_r * mn * mn * ris_pathloss + eta.eta_d / (bs_ue_m * bs_ue_m) +
         eta.eta_x * mn * std::sqrt(ris_pathloss) / bs_ue_m;
}

}  // namespace riscov
