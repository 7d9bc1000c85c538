// C surface of the shared library: opaque handles around the core types,
// exceptions mapped to status codes, messages kept on the handle.
#include "riscov.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "coverage.hpp"
#include "montecarlo.hpp"
#include "placement.hpp"
#include "rng.hpp"
#include "scenario.hpp"
#include "types.hpp"

struct riscov_scenario {
  riscov::Scenario scn;
  std::string error;
};

struct riscov_boundary {
  riscov::CoverageBoundary boundary;
};

namespace {

template <typename Fn>
int guarded(riscov_scenario* sc, Fn&& fn) {
  if (!sc) return RISCOV_ERR_INVALID;
  try {
    fn();
    sc->error.clear();
    return RISCOV_OK;
  } catch (const riscov::Error& e) {
    sc->error = e.what();
    return static_cast<int>(e.status());
  } catch (const std::exception& e) {
    sc->error = e.what();
    return RISCOV_ERR_INVALID;
  }
}

int make_scenario(riscov_scenario** out, const char* source, bool is_path) {
  if (!out) return RISCOV_ERR_INVALID;
  auto* handle = new riscov_scenario{};
  *out = handle;
  if (!source) {
    handle->error = "null input";
    return RISCOV_ERR_INVALID;
  }
  return guarded(handle, [&] {
    handle->scn = is_path ? riscov::load_scenario(source) : riscov::parse_scenario(source);
  });
}

}  // namespace

extern "C" {

const char* riscov_version(void) { return RISCOV_VERSION; }

const char* riscov_rng_algorithm(void) { return riscov::rng::kAlgorithm; }

int riscov_scenario_default(riscov_scenario** out) {
  if (!out) return RISCOV_ERR_INVALID;
  *out = new riscov_scenario{};
  return RISCOV_OK;
}

int riscov_scenario_open(const char* path, riscov_scenario** out) {
  return make_scenario(out, path, true);
}

int riscov_scenario_parse(const char* text, riscov_scenario** out) {
  return make_scenario(out, text, false);
}

void riscov_scenario_free(riscov_scenario* sc) { delete sc; }

const char* riscov_errmsg(const riscov_scenario* sc) {
  return sc ? sc->error.c_str() : "null scenario handle";
}

int riscov_scenario_set(riscov_scenario* sc, const char* key, double value) {
  if (!sc) return RISCOV_ERR_INVALID;
  if (!key) {
    sc->error = "null key";
    return RISCOV_ERR_INVALID;
  }
  return guarded(sc, [&] { riscov::scenario_set(sc->scn, key, value); });
}

int riscov_scenario_set_str(riscov_scenario* sc, const char* key, const char* value) {
  if (!sc) return RISCOV_ERR_INVALID;
  if (!key || !value) {
    sc->error = "null key or value";
    return RISCOV_ERR_INVALID;
  }
  return guarded(sc, [&] { riscov::scenario_set_string(sc->scn, key, value); });
}

int riscov_scenario_get(riscov_scenario* sc, const char* key, double* out) {
  if (!sc) return RISCOV_ERR_INVALID;
  if (!key || !out) {
    sc->error = "null key or output";
    return RISCOV_ERR_INVALID;
  }
  return guarded(sc, [&] { *out = riscov::scenario_get(sc->scn, key); });
}

int riscov_scenario_echo(riscov_scenario* sc, char* buf, size_t cap, size_t* needed) {
  if (!sc) return RISCOV_ERR_INVALID;
  return guarded(sc, [&] {
    std::string text;
    for (const auto& [key, value] : riscov::scenario_echo(sc->scn)) {
      text += key;
      text += " = ";
      text += value;
      text += '\n';
    }
    if (needed) *needed = text.size() + 1;
    if (buf && cap > 0) {
      const size_t n = std::min(cap - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
  });
}

int riscov_feasible(riscov_scenario* sc, int* feasible, double* d_h_limit_m) {
  if (!sc) return RISCOV_ERR_INVALID;
  return guarded(sc, [&] {
    if (feasible) *feasible = riscov::feasibility_check(sc->scn) ? 1 : 0;
    if (d_h_limit_m) *d_h_limit_m = riscov::feasible_distance_limit(sc->scn);
  });
}

int riscov_snr(riscov_scenario* sc, double phi_rad, double d_bu_h_m, double* snr_linear) {
  if (!sc) return RISCOV_ERR_INVALID;
  if (!snr_linear) {
    sc->error = "null output";
    return RISCOV_ERR_INVALID;
  }
  return guarded(sc, [&] { *snr_linear = riscov::snr_field(sc->scn, phi_rad, d_bu_h_m); });
}

int riscov_coverage_area(riscov_scenario* sc, double* area_m2) {
  if (!sc) return RISCOV_ERR_INVALID;
  if (!area_m2) {
    sc->error = "null output";
    return RISCOV_ERR_INVALID;
  }
  return guarded(sc, [&] { *area_m2 = riscov::coverage_area(sc->scn); });
}

int riscov_coverage(riscov_scenario* sc, riscov_boundary** out) {
  if (!sc) return RISCOV_ERR_INVALID;
  if (!out) {
    sc->error = "null output";
    return RISCOV_ERR_INVALID;
  }
  *out = nullptr;
  return guarded(sc, [&] {
    auto* b = new riscov_boundary{riscov::coverage_profile(sc->scn)};
    *out = b;
  });
}

size_t riscov_boundary_samples(const riscov_boundary* b) {
  return b ? b->boundary.samples.size() : 0;
}

int riscov_boundary_sample(const riscov_boundary* b, size_t index, double* phi_rad,
                           double* radius_m, int* plane_limited) {
  if (!b || index >= b->boundary.samples.size()) return RISCOV_ERR_INVALID;
  const riscov::BoundarySample& s = b->boundary.samples[index];
  if (phi_rad) *phi_rad = s.phi_rad;
  if (radius_m) *radius_m = s.radius_m;
  if (plane_limited) *plane_limited = s.plane_limited ? 1 : 0;
  return RISCOV_OK;
}

double riscov_boundary_area(const riscov_boundary* b) { return b ? b->boundary.area_m2 : 0.0; }

double riscov_boundary_phi_lower(const riscov_boundary* b) {
  return b ? b->boundary.phi_lower_rad : 0.0;
}

double riscov_boundary_phi_upper(const riscov_boundary* b) {
  return b ? b->boundary.phi_upper_rad : 0.0;
}

int riscov_boundary_extra_sign_changes(const riscov_boundary* b) {
  return b ? b->boundary.extra_sign_changes : 0;
}

void riscov_boundary_free(riscov_boundary* b) { delete b; }

int riscov_default_bounds(riscov_scenario* sc, double* lo_m, double* hi_m) {
  if (!sc) return RISCOV_ERR_INVALID;
  return guarded(sc, [&] {
    const auto [lo, hi] = riscov::default_bounds(sc->scn);
    if (lo_m) *lo_m = lo;
    if (hi_m) *hi_m = hi;
  });
}

int riscov_optimize(riscov_scenario* sc, double lo_m, double hi_m, riscov_placement* out) {
  if (!sc) return RISCOV_ERR_INVALID;
  if (!out) {
    sc->error = "null output";
    return RISCOV_ERR_INVALID;
  }
  return guarded(sc, [&] {
    const riscov::PlacementSolution sol = riscov::cma(sc->scn, lo_m, hi_m);
    out->d_h_star_m = sol.horizontal_distance_m;
    out->psi_star_rad = sol.orientation_rad;
    out->area_star_m2 = sol.area_m2;
    out->evaluations = sol.evaluations;
    out->bracket_lo_m = sol.bracket_lo_m;
    out->bracket_hi_m = sol.bracket_hi_m;
  });
}

int riscov_baseline_bss(riscov_scenario* sc, double* d_h_m, double* psi_rad) {
  if (!sc) return RISCOV_ERR_INVALID;
  return guarded(sc, [&] {
    const auto [d, psi] = riscov::baseline_bss(sc->scn);
    if (d_h_m) *d_h_m = d;
    if (psi_rad) *psi_rad = psi;
  });
}

int riscov_baseline_random(riscov_scenario* sc, uint64_t seed, double lo_m, double hi_m,
                           double* d_h_m, double* psi_rad) {
  if (!sc) return RISCOV_ERR_INVALID;
  return guarded(sc, [&] {
    const auto [d, psi] = riscov::baseline_random(sc->scn, seed, lo_m, hi_m);
    if (d_h_m) *d_h_m = d;
    if (psi_rad) *psi_rad = psi;
  });
}

int riscov_mc_area(riscov_scenario* sc, long long n_samples, uint64_t seed,
                   riscov_mc_estimate* out) {
  if (!sc) return RISCOV_ERR_INVALID;
  if (!out) {
    sc->error = "null output";
    return RISCOV_ERR_INVALID;
  }
  return guarded(sc, [&] {
    const riscov::McEstimate est = riscov::mc_coverage_area(sc->scn, n_samples, seed);
    out->area_m2 = est.area_m2;
    out->std_error_m2 = est.std_error_m2;
    out->n_samples = est.n_samples;
    out->n_inside = est.n_inside;
    out->seed = est.seed;
    out->sampling_radius_m = est.sampling_radius_m;
  });
}

}  // extern "C"
