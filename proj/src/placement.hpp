#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "types.hpp"

namespace riscov {

// The coverage-maximizing panel orientation, independent of the horizontal
// distance: the panel faces the BS squarely.
double optimal_orientation();

// Fraunhofer far-field boundary 2 L^2 / lambda of the panel, with L the
// diagonal aperture.
double fraunhofer_distance(const RisPanel& panel, double wavelength_m);

// Default search interval for the horizontal distance: [1 m, feasibility
// limit]. Throws when the interval is empty.
std::pair<double, double> default_bounds(const Scenario& scn);

// Coverage area over a grid of orientations, all other parameters fixed.
// Output is sorted by orientation.
std::vector<std::pair<double, double>> orientation_sweep(const Scenario& scn,
                                                         std::vector<double> psi_grid);

// Maximize the coverage area over the horizontal distance at the optimal
// orientation: a 64-node scan locates the best bracket, golden-section
// refines it. The returned area is an actual evaluation at the returned
// distance.
PlacementSolution optimize_horizontal_distance(const Scenario& scn, double lo_m,
                                               double hi_m);

// Full placement optimization: closed-form orientation, then the horizontal
// distance search.
PlacementSolution cma(const Scenario& scn, double lo_m, double hi_m);

// Baseline placements: uniformly random feasible placement, and the panel
// parked at the BS-side far-field edge.
std::pair<double, double> baseline_random(const Scenario& scn, std::uint64_t seed,
                                          double lo_m, double hi_m);
std::pair<double, double> baseline_bss(const Scenario& scn);

}  // namespace riscov
