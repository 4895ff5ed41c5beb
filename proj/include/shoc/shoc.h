/*
 * Copyright (C) 2026 The shoc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the shoc solver library.
 *
 * Every function returns a shoc_status. On failure, shoc_last_error() holds a
 * message for the calling thread and, for SHOC_ERR_CONFIG, shoc_last_error_field()
 * names the offending configuration key. Handles are opaque and must be
 * released with the matching *_destroy function.
 */

#ifndef SHOC_SHOC_H_
#define SHOC_SHOC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(SHOC_BUILDING_LIBRARY)
#define SHOC_API __attribute__((visibility("default")))
#else
#define SHOC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum shoc_status {
  SHOC_OK = 0,
  SHOC_ERR_INTERNAL = 1,
  SHOC_ERR_CONFIG = 2,
  SHOC_ERR_INSTABILITY = 3,
  SHOC_ERR_ACCEPTANCE = 4,
  SHOC_ERR_INVALID_ARGUMENT = 5,
  SHOC_ERR_IO = 6
} shoc_status;

typedef enum shoc_scheme {
  SHOC_SCHEME_CD2 = 0,
  SHOC_SCHEME_2SHOC = 1,
  SHOC_SCHEME_2SHOC_MULTI = 2,
  SHOC_SCHEME_WIDE4 = 3
} shoc_scheme;

typedef enum shoc_bc { SHOC_BC_DIRICHLET = 0, SHOC_BC_MSD = 1 } shoc_bc;

typedef enum shoc_dominant { SHOC_DOMINANT_BOUNDARY = 0, SHOC_DOMINANT_INTERIOR = 1 } shoc_dominant;

typedef struct shoc_config shoc_config;
typedef struct shoc_run shoc_run;

typedef struct shoc_grid_info {
  int dim;
  double h;
  size_t counts[3];
  double mins[3];
  double maxs[3];
  size_t points;
} shoc_grid_info;

typedef struct shoc_run_report {
  int scheme; /* shoc_scheme */
  int bc;     /* shoc_bc */
  shoc_grid_info grid;
  double k;
  double k_max;
  double boundary_norm;
  double interior_norm;
  int dominant; /* shoc_dominant */
  size_t steps;
  size_t rhs_calls;
  size_t snapshots_requested;
  size_t snapshots_completed;
  double e_real; /* mean over completed snapshots; NaN without an exact solution */
  double e_imag;
  double wall_seconds;
  size_t buffers;
  size_t expected_buffers;
  size_t guarded_points;
  double initial_sup;
  double final_sup;
  int completed;
  size_t failure_step;
  double failure_time;
  char failure[256];
} shoc_run_report;

typedef struct shoc_convergence_row {
  double h;
  shoc_run_report report;
  int has_order; /* 0 for the first row or when an error is zero */
  double order_real;
  double order_imag;
} shoc_convergence_row;

typedef struct shoc_stability_info {
  shoc_grid_info grid;
  double k_max;
  double k_chosen;
  int k_explicit; /* 1 when the config fixes k */
  double boundary_norm;
  double interior_norm;
  int dominant; /* shoc_dominant */
  size_t guarded_points;
  double linear_bound; /* (3/4) h^2 / (d sqrt(2) a) */
} shoc_stability_info;

typedef struct shoc_cost_row {
  int dim;
  int scheme; /* shoc_scheme */
  int laplacian_ops;
  int laplacian_storage;
  int rk4_ops;
  int rk4_storage;
} shoc_cost_row;

typedef struct shoc_bench_result {
  int scheme; /* shoc_scheme */
  size_t points;
  int steps;
  double seconds_per_step;
  double ns_per_point_step;
  size_t storage_measured;
  size_t storage_expected;
  long allocations_during_steps;
  int storage_ok;
} shoc_bench_result;

/*
 * Called after each snapshot. `psi` holds `points` complex values as
 * interleaved (re, im) pairs in flat row-major order (last axis contiguous).
 * A nonzero return aborts the run with SHOC_ERR_IO.
 */
typedef int (*shoc_snapshot_fn)(void* user, int index, double t, const double* psi,
                                size_t points);

SHOC_API const char* shoc_version(void);
SHOC_API const char* shoc_last_error(void);
SHOC_API const char* shoc_last_error_field(void);
SHOC_API const char* shoc_scheme_name(int scheme);
SHOC_API const char* shoc_bc_name(int bc);
/* Description of which snapshot times enter the averaged error. */
SHOC_API const char* shoc_snapshot_policy(void);
SHOC_API shoc_status shoc_set_threads(int threads);

/* Configuration: an unvalidated key/value map, resolved on use. */
SHOC_API shoc_status shoc_config_create(shoc_config** out);
SHOC_API void shoc_config_destroy(shoc_config* cfg);
SHOC_API shoc_status shoc_config_clone(const shoc_config* cfg, shoc_config** out);
/* Adds every key of the file, replacing existing values. */
SHOC_API shoc_status shoc_config_load_file(shoc_config* cfg, const char* path);
SHOC_API shoc_status shoc_config_set(shoc_config* cfg, const char* key, const char* value);
SHOC_API shoc_status shoc_config_validate(const shoc_config* cfg);
/*
 * String outputs: writes at most `cap` bytes including the terminator and
 * stores the full length (without terminator) in *needed when non-null.
 */
SHOC_API shoc_status shoc_config_get(const shoc_config* cfg, const char* key, char* buf,
                                     size_t cap, size_t* needed);
/* Every resolved key as "key = value" lines. */
SHOC_API shoc_status shoc_config_resolved_text(const shoc_config* cfg, char* buf, size_t cap,
                                               size_t* needed);

/* A single run at spacing h (h <= 0 uses grid.h from the config). */
SHOC_API shoc_status shoc_run_create(const shoc_config* cfg, double h, shoc_run** out);
SHOC_API void shoc_run_destroy(shoc_run* run);
SHOC_API shoc_status shoc_run_grid(const shoc_run* run, shoc_grid_info* out);
/*
 * Integrates to t_end. Returns SHOC_ERR_INSTABILITY if the run aborted; the
 * partial report is still available.
 */
SHOC_API shoc_status shoc_run_execute(shoc_run* run, shoc_snapshot_fn fn, void* user);
SHOC_API shoc_status shoc_run_report_get(const shoc_run* run, shoc_run_report* out);
/* Per-snapshot times and errors; *count receives the number available. */
SHOC_API shoc_status shoc_run_snapshot_errors(const shoc_run* run, double* t, double* e_real,
                                              double* e_imag, size_t cap, size_t* count);

/* One run per h (strictly decreasing); `rows` must hold n entries. */
SHOC_API shoc_status shoc_converge(const shoc_config* cfg, const double* hs, size_t n,
                                   shoc_convergence_row* rows, int* has_overall,
                                   double* overall);
SHOC_API shoc_status shoc_stability(const shoc_config* cfg, shoc_stability_info* out);
SHOC_API shoc_status shoc_equivalence_check(int dim, int scheme, int trials, uint64_t seed,
                                            size_t points_per_axis, double* max_deviation);
SHOC_API shoc_status shoc_cost_lookup(int dim, int scheme, shoc_cost_row* out);
SHOC_API shoc_status shoc_bench(const shoc_config* cfg, int scheme, int steps,
                                shoc_bench_result* out);
/* (ln e1 - ln e2) / ln(h1 / h2); *defined is 0 when an error is zero. */
SHOC_API shoc_status shoc_order_between(double e1, double e2, double h1, double h2,
                                        int* defined, double* order);

#ifdef __cplusplus
}
#endif

#endif /* SHOC_SHOC_H_ */
