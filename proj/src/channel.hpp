#pragma once

#include <complex>

#include "geometry.hpp"
#include "types.hpp"

namespace riscov {

// Reflection amplitude of the panel: cos(theta_i), clamped to [0, 1]. One
// value per panel; element states do not change it.
double reflection_amplitude(const SiteGeometry& site, IncidenceMode mode);

// Center of element (m, n), 0-based. The grid is centered on the panel
// center: the m axis runs along the ground trace of the panel, the n axis is
// vertical.
Vec3 element_position(const RisPanel& panel, const SiteGeometry& site, int m, int n);

// Complex gain of one reflected path given the BS-element and element-UE
// distances.
std::complex<double> element_channel_gain(const RadioConfig& radio, const RisPanel& panel,
                                          double bs_element_m, double element_ue_m);

// Complex gain of the direct BS-UE path (free space).
std::complex<double> direct_channel_gain(const RadioConfig& radio, double bs_ue_m);

// Phase shifts that co-phase every reflected path with the direct one; the
// coherent sum is then maximal over all phase settings.
PhaseMatrix optimal_phases(const RadioConfig& radio, const RisPanel& panel,
                           const SiteGeometry& site, const UePolar& ue);

// Coherent sum of all reflected paths plus the direct path. In
// CommonPathloss mode magnitudes use the panel-center distances while phases
// stay per-element; ExactElementwise uses per-element distances throughout.
std::complex<double> composite_channel(const RadioConfig& radio, const RisPanel& panel,
                                       const SiteGeometry& site, const UePolar& ue,
                                       const PhaseMatrix& phases, PathlossMode mode,
                                       IncidenceMode incidence);

double snr(const RadioConfig& radio, std::complex<double> h);

// Coefficients of the closed-form maximum SNR, split into reflected, direct
// and cross contributions.
EtaCoefficients eta_coefficients(const RadioConfig& radio, const RisPanel& panel,
                                 double theta_i_rad);

// Maximum SNR under optimal phases:
//   eta_r * (MN)^2 * PL_R + eta_d / d_BU^2 + eta_x * MN * sqrt(PL_R) / d_BU
// with PL_R the two-hop pathloss of the reflected route.
double max_snr_closed_form(const EtaCoefficients& eta, const RisPanel& panel,
                           double ris_pathloss, double bs_ue_m);

}  // namespace riscov
