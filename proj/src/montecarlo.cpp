#include "montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <vector>

#include "channel.hpp"
#include "coverage.hpp"
#include "geometry.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace riscov {

namespace {

constexpr double kSamplingMargin = 1.5;
constexpr double kMinSampleDistance = 0.1;

// Flat element data reused across samples; the BS side of every path is
// fixed by the geometry.
struct PanelData {
  std::vector<Vec3> positions;
  std::vector<double> bs_distances;
  double gamma = 0.0;
  double wave_number = 0.0;
  double mag_scale = 0.0;      // lambda * sqrt(G * sM * sN) / (4 pi)^(3/2)
  double direct_scale = 0.0;   // lambda * sqrt(G) / (4 pi)
  double half_alpha = 0.0;
  double bs_ris = 0.0;
  double ue_height = 0.0;
  double bs_ue_dz = 0.0;
  double ris_dx = 0.0;         // RIS center ground coordinates
  double ris_dz = 0.0;
};

PanelData build_panel_data(const Scenario& scn) {
  PanelData data;
  const Vec3 bs = bs_position(scn.site);
  data.positions.reserve(static_cast<size_t>(scn.panel.count_m) * scn.panel.count_n);
  data.bs_distances.reserve(data.positions.capacity());
  for (int m = 0; m < scn.panel.count_m; ++m) {
    for (int n = 0; n < scn.panel.count_n; ++n) {
      const Vec3 e = element_position(scn.panel, scn.site, m, n);
      data.positions.push_back(e);
      data.bs_distances.push_back(distance(bs, e));
    }
  }
  data.gamma = reflection_amplitude(scn.site, scn.incidence_mode);
  data.wave_number = kTwoPi / scn.radio.wavelength_m;
  data.mag_scale = scn.radio.wavelength_m *
                   std::sqrt(scn.radio.antenna_gain * scn.panel.element_width_m *
                             scn.panel.element_height_m) /
                   std::pow(4.0 * kPi, 1.5);
  data.direct_scale = scn.radio.wavelength_m * std::sqrt(scn.radio.antenna_gain) / (4.0 * kPi);
  data.half_alpha = 0.5 * scn.radio.pathloss_exponent;
  data.bs_ris = bs_ris_distance(scn.site);
  data.ue_height = scn.site.ue_height_m;
  data.bs_ue_dz = scn.site.bs_height_m - scn.site.ue_height_m;
  data.ris_dx = scn.site.horizontal_distance_m;
  data.ris_dz = scn.site.ris_height_m - scn.site.ue_height_m;
  return data;
}

// Coherent sum at ground position (x, y), optimal phases applied per element.
double coherent_snr(const Scenario& scn, const PanelData& data, double x, double y,
                    PathlossMode mode) {
  const double k = data.wave_number;
  const double d_bu = std::sqrt(x * x + y * y + data.bs_ue_dz * data.bs_ue_dz);

  double common_mag = 0.0;
  if (mode == PathlossMode::CommonPathloss && !data.positions.empty()) {
    const double dxc = x - data.ris_dx;
    const double d_center = std::sqrt(dxc * dxc + y * y + data.ris_dz * data.ris_dz);
    common_mag = data.mag_scale / std::pow(data.bs_ris * d_center, data.half_alpha);
  }

  std::complex<double> acc{0.0, 0.0};
  for (size_t i = 0; i < data.positions.size(); ++i) {
    const Vec3& e = data.positions[i];
    const double dx = x - e.x;
    const double dy = y - e.y;
    const double dz = data.ue_height - e.z;
    const double d_e = std::sqrt(dx * dx + dy * dy + dz * dz);
    const double bs_e = data.bs_distances[i];
    const double mag = mode == PathlossMode::CommonPathloss
                           ? common_mag
                           : data.mag_scale / std::pow(bs_e * d_e, data.half_alpha);
    const double shift = wrap_angle(k * (d_bu - bs_e - d_e));
    acc += std::polar(mag, -(shift + k * (bs_e + d_e)));
  }
  const std::complex<double> h =
      data.gamma * acc + std::polar(data.direct_scale / d_bu, wrap_angle(-k * d_bu));
  return scn.radio.snr_scale() * std::norm(h);
}

}  // namespace

double mc_snr_at(const Scenario& scn, const UePolar& ue, PathlossMode mode) {
  const PhaseMatrix phases = optimal_phases(scn.radio, scn.panel, scn.site, ue);
  return snr(scn.radio, composite_channel(scn.radio, scn.panel, scn.site, ue, phases, mode,
                                          scn.incidence_mode));
}

double mc_snr_at(const Scenario& scn, const UePolar& ue) {
  return mc_snr_at(scn, ue, scn.mc_mode);
}

McEstimate mc_coverage_area(const Scenario& scn, long long n_samples, std::uint64_t seed) {
  if (n_samples < 1000) {
    throw Error(Status::InvalidArgument, "Monte Carlo needs at least 1000 samples");
  }
  if (!feasibility_check(scn)) {
    throw Error(Status::Infeasible, "Monte Carlo area requires a feasible scenario");
  }

  // Size the sampling disk from the analytic boundary; the cell is contained
  // strictly inside and the margin leaves room to catch disagreement.
  const CoverageBoundary profile = coverage_profile(scn);
  double max_radius = 0.0;
  for (const BoundarySample& s : profile.samples) {
    max_radius = std::max(max_radius, s.radius_m);
  }
  const double disk_radius = kSamplingMargin * max_radius;
  const double disk_area = kPi * disk_radius * disk_radius;

  const PanelData data = build_panel_data(scn);
  const double threshold = scn.radio.threshold;
  const PathlossMode mode = scn.mc_mode;

  std::atomic<long long> inside{0};
  parallel_for(n_samples, scn.threads, [&](long long i) {
    const double u1 = rng::uniform01(seed, 2 * static_cast<std::uint64_t>(i));
    const double u2 = rng::uniform01(seed, 2 * static_cast<std::uint64_t>(i) + 1);
    const double r = std::max(disk_radius * std::sqrt(u1), kMinSampleDistance);
    const double angle = kTwoPi * u2;
    const double x = r * std::cos(angle);
    const double y = r * std::sin(angle);
    if (!same_side_as_bs(scn.site, x, y)) return;
    if (coherent_snr(scn, data, x, y, mode) >= threshold) {
      inside.fetch_add(1, std::memory_order_relaxed);
    }
  });

  const long long n_inside = inside.load();
  const double p = static_cast<double>(n_inside) / static_cast<double>(n_samples);
  McEstimate est;
  est.area_m2 = disk_area * p;
  est.std_error_m2 = disk_area * std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples));
  est.n_samples = n_samples;
  est.n_inside = n_inside;
  est.seed = seed;
  est.sampling_radius_m = disk_radius;
  return est;
}

}  // namespace riscov
