#pragma once

#include <cstdint>

#include "types.hpp"

namespace riscov {

// SNR at one UE position from the coherent element-wise channel sum under
// optimal phases. In CommonPathloss mode this reproduces the closed form
// exactly; ExactElementwise keeps per-element magnitudes and is the
// independent check on the far-field assumptions.
double mc_snr_at(const Scenario& scn, const UePolar& ue, PathlossMode mode);
double mc_snr_at(const Scenario& scn, const UePolar& ue);

// Rejection estimate of the cell area: UE positions sampled uniformly over a
// disk around the BS sized at 1.5x the largest analytic boundary radius; a
// sample counts when it lies on the BS side of the RIS plane and its
// coherent-sum SNR meets the threshold. Deterministic for a given seed and
// any thread count.
McEstimate mc_coverage_area(const Scenario& scn, long long n_samples, std::uint64_t seed);

}  // namespace riscov
