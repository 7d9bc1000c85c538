/* riscov — coverage analysis and placement optimization for a single-cell
 * downlink assisted by a reconfigurable reflecting panel.
 *
 * C interface of the shared library. Objects are opaque handles; every
 * fallible call returns a riscov_status and leaves a message readable
 * through riscov_errmsg() on the scenario handle it operated on.
 */
#ifndef RISCOV_H
#define RISCOV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RISCOV_VERSION "1.0.0"
#define RISCOV_SCHEMA_VERSION "1"

typedef enum riscov_status {
  RISCOV_OK = 0,
  RISCOV_ERR_INVALID = 1,    /* bad argument or invalid configuration value */
  RISCOV_ERR_PARSE = 2,      /* scenario text/file could not be parsed */
  RISCOV_ERR_INFEASIBLE = 3, /* direct link below threshold at the RIS foot */
  RISCOV_ERR_SOLVER = 4,     /* numerical solver failed */
  RISCOV_ERR_MISMATCH = 5    /* verification gap exceeded its tolerance */
} riscov_status;

typedef struct riscov_scenario riscov_scenario;
typedef struct riscov_boundary riscov_boundary;

typedef struct riscov_placement {
  double d_h_star_m;
  double psi_star_rad;
  double area_star_m2;
  long long evaluations;
  double bracket_lo_m;
  double bracket_hi_m;
} riscov_placement;

typedef struct riscov_mc_estimate {
  double area_m2;
  double std_error_m2;
  long long n_samples;
  long long n_inside;
  uint64_t seed;
  double sampling_radius_m;
} riscov_mc_estimate;

const char* riscov_version(void);
const char* riscov_rng_algorithm(void);

/* Scenario lifecycle. The handle is always allocated (read riscov_errmsg and
 * free it even when creation reports an error); NULL path/text is invalid. */
int riscov_scenario_default(riscov_scenario** out);
int riscov_scenario_open(const char* path, riscov_scenario** out);
int riscov_scenario_parse(const char* text, riscov_scenario** out);
void riscov_scenario_free(riscov_scenario* sc);

/* Message of the most recent failure on this handle ("" after success). */
const char* riscov_errmsg(const riscov_scenario* sc);

/* Keyed access in scenario-file units (see docs: radio.*, panel.*, site.*,
 * solver.*). String keys are solver.incidence_mode and solver.mc_mode. */
int riscov_scenario_set(riscov_scenario* sc, const char* key, double value);
int riscov_scenario_set_str(riscov_scenario* sc, const char* key, const char* value);
int riscov_scenario_get(riscov_scenario* sc, const char* key, double* out);

/* Resolved configuration as "key = value" lines. Writes up to cap bytes
 * (NUL-terminated) and stores the required size incl. NUL in *needed. */
int riscov_scenario_echo(riscov_scenario* sc, char* buf, size_t cap, size_t* needed);

/* Analysis. */
int riscov_feasible(riscov_scenario* sc, int* feasible, double* d_h_limit_m);
int riscov_snr(riscov_scenario* sc, double phi_rad, double d_bu_h_m, double* snr_linear);
int riscov_coverage_area(riscov_scenario* sc, double* area_m2);
int riscov_coverage(riscov_scenario* sc, riscov_boundary** out);

/* Boundary accessors. */
size_t riscov_boundary_samples(const riscov_boundary* b);
int riscov_boundary_sample(const riscov_boundary* b, size_t index, double* phi_rad,
                           double* radius_m, int* plane_limited);
double riscov_boundary_area(const riscov_boundary* b);
double riscov_boundary_phi_lower(const riscov_boundary* b);
double riscov_boundary_phi_upper(const riscov_boundary* b);
int riscov_boundary_extra_sign_changes(const riscov_boundary* b);
void riscov_boundary_free(riscov_boundary* b);

/* Placement. Bounds are clipped to the feasibility limit. */
int riscov_default_bounds(riscov_scenario* sc, double* lo_m, double* hi_m);
int riscov_optimize(riscov_scenario* sc, double lo_m, double hi_m, riscov_placement* out);
int riscov_baseline_bss(riscov_scenario* sc, double* d_h_m, double* psi_rad);
int riscov_baseline_random(riscov_scenario* sc, uint64_t seed, double lo_m, double hi_m,
                           double* d_h_m, double* psi_rad);

/* Monte Carlo area estimate (deterministic per seed, any thread count). */
int riscov_mc_area(riscov_scenario* sc, long long n_samples, uint64_t seed,
                   riscov_mc_estimate* out);

#ifdef __cplusplus
}
#endif

#endif /* RISCOV_H */
