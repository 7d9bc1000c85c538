#pragma once

#include "types.hpp"

namespace riscov {

// Two-hop pathloss of the reflected route toward azimuth phi at horizontal
// BS-UE distance d_bu_h.
double ris_pathloss(const Scenario& scn, double phi_rad, double d_bu_h_m);

// SNR under optimal phases as a field over (phi, d_bu_h). Horizontal
// distances below 0.1 m are evaluated at 0.1 m to keep the vertical-only
// sample finite.
double snr_field(const Scenario& scn, double phi_rad, double d_bu_h_m);

// True when the direct link alone still meets the threshold at the foot of
// the RIS, the condition under which the coverage boundary is unique in
// every direction. Equality is accepted.
bool feasibility_check(const Scenario& scn);

// Largest horizontal BS-RIS distance passing feasibility_check; 0 when no
// distance does.
double feasible_distance_limit(const Scenario& scn);

// Horizontal distance at which the SNR field drops to the threshold in
// direction phi. Requires feasibility; the root lies at or beyond the RIS
// foot where the field decreases strictly.
double coverage_radius(const Scenario& scn, double phi_rad);

// The two azimuths where the SNR boundary meets the RIS plane boundary, one
// in [0, psi) and one in (psi + pi, 2*pi].
Crossover crossover_angles(const Scenario& scn);

// Sampled polar boundary of the cell over [0, 2*pi), with the enclosed area
// and the crossover angles attached.
CoverageBoundary coverage_profile(const Scenario& scn);

// Cell area: trapezoid quadrature of the SNR-limited arc between the
// crossover angles plus the exact triangle closed by the plane-limited rays.
double coverage_area(const Scenario& scn);

}  // namespace riscov
