#include "geometry.hpp"

#include <algorithm>

namespace riscov {

double wrap_angle(double rad) {
  double a = std::fmod(rad, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Vec3 bs_position(const SiteGeometry& site) { return {0.0, 0.0, site.bs_height_m}; }

Vec3 ris_center(const SiteGeometry& site) {
  return {site.horizontal_distance_m, 0.0, site.ris_height_m};
}

Vec3 ue_position(const SiteGeometry& site, const UePolar& ue) {
  const double phi = wrap_angle(ue.azimuth_rad);
  return {ue.horizontal_distance_m * std::cos(phi),
          ue.horizontal_distance_m * std::sin(phi), site.ue_height_m};
}

double horizontal_ue_ris_distance(const SiteGeometry& site, const UePolar& ue) {
  const double a = site.horizontal_distance_m;
  const double b = ue.horizontal_distance_m;
  const double sq = a * a + b * b - 2.0 * a * b * std::cos(ue.azimuth_rad);
  return std::sqrt(std::max(sq, 0.0));
}

double bs_ue_distance(const SiteGeometry& site, const UePolar& ue) {
  return std::hypot(ue.horizontal_distance_m, site.bs_height_m - site.ue_height_m);
}

double ue_ris_distance(const SiteGeometry& site, const UePolar& ue) {
  return std::hypot(horizontal_ue_ris_distance(site, ue),
                    site.ris_height_m - site.ue_height_m);
}

double bs_ris_distance(const SiteGeometry& site) {
  return std::hypot(site.horizontal_distance_m, site.bs_height_m - site.ris_height_m);
}

double boundary_ray_length(const SiteGeometry& site, double phi_rad) {
  const double psi = site.orientation_rad;
  const double phi = wrap_angle(phi_rad);
  if (phi >= psi && phi <= psi + kPi) {
    throw Error(Status::InvalidArgument,
                "boundary ray undefined: azimuth does not cross the RIS plane "
                "on the BS side");
  }
  const double denom = std::cos(phi) - std::sin(phi) * std::cos(psi) / std::sin(psi);
  return site.horizontal_distance_m / denom;
}

double incidence_angle(const SiteGeometry& site, IncidenceMode mode) {
  double cos_elevation = 1.0;
  if (mode == IncidenceMode::Full3d) {
    const double dz = std::abs(site.bs_height_m - site.ris_height_m);
    cos_elevation = site.horizontal_distance_m / std::hypot(site.horizontal_distance_m, dz);
  }
  const double c = std::clamp(cos_elevation * std::sin(site.orientation_rad), 0.0, 1.0);
  return std::acos(c);
}

bool same_side_as_bs(const SiteGeometry& site, double x, double y) {
  const double psi = site.orientation_rad;
  // Cross product of the panel trace direction with the offset from the trace
  // anchor; the BS itself gives D_h * sin(psi) > 0.
  return std::cos(psi) * y - std::sin(psi) * (x - site.horizontal_distance_m) > 0.0;
}

}  // namespace riscov
