#pragma once

#include "types.hpp"

namespace riscov {

// Azimuth normalized into [0, 2*pi).
double wrap_angle(double rad);

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double distance(const Vec3& a, const Vec3& b);

// Ground-plane layout: BS at the origin, RIS center at (D_h, 0), heights
// along z. Azimuths are measured from the BS->RIS direction.
Vec3 bs_position(const SiteGeometry& site);
Vec3 ris_center(const SiteGeometry& site);
Vec3 ue_position(const SiteGeometry& site, const UePolar& ue);

// Horizontal UE-RIS distance (cosine rule in the ground plane).
double horizontal_ue_ris_distance(const SiteGeometry& site, const UePolar& ue);

// 3-D link distances.
double bs_ue_distance(const SiteGeometry& site, const UePolar& ue);
double ue_ris_distance(const SiteGeometry& site, const UePolar& ue);
double bs_ris_distance(const SiteGeometry& site);

// Distance from the BS to the RIS plane along azimuth phi. Only defined on
// the BS side of the plane, i.e. phi in [0, psi) or (psi + pi, 2*pi); grows
// without bound as phi approaches either plane direction.
double boundary_ray_length(const SiteGeometry& site, double phi_rad);

// Angle between the BS->RIS ray and the panel normal. The panel is mounted
// vertically, so its normal is horizontal; Horizontal mode additionally
// ignores the BS elevation seen from the panel.
double incidence_angle(const SiteGeometry& site, IncidenceMode mode);

// True when the ground-plane point (x, y) lies strictly on the BS side of
// the RIS plane.
bool same_side_as_bs(const SiteGeometry& site, double x, double y);

}  // namespace riscov
