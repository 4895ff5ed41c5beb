// Copyright (C) 2026 The shoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shoc/shoc.h"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "shoc/config.hpp"
#include "shoc/error.hpp"
#include "shoc/simulation.hpp"
#include "shoc/stability.hpp"
#include "shoc/verification.hpp"

struct shoc_config {
  shoc::ConfigMap raw;
};

struct shoc_run {
  shoc::RunConfig cfg;
  double h;
  shoc::Grid grid;
  std::optional<shoc::RunReport> report;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_field;

void set_error(const std::string& what, const std::string& field = {}) {
  g_error = what;
  g_error_field = field;
}

template <class Fn>
shoc_status guarded(Fn&& fn) noexcept {
  try {
    set_error({});
    return fn();
  } catch (const shoc::ConfigError& e) {
    set_error(e.what(), e.field());
    return SHOC_ERR_CONFIG;
  } catch (const shoc::InstabilityError& e) {
    set_error(e.what());
    return SHOC_ERR_INSTABILITY;
  } catch (const shoc::IoError& e) {
    set_error(e.what());
    return SHOC_ERR_IO;
  } catch (const shoc::InvalidArgument& e) {
    set_error(e.what());
    return SHOC_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return SHOC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SHOC_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return SHOC_ERR_INTERNAL;
  }
}

shoc_status null_argument(const char* name) {
  set_error(std::string("null argument: ") + name);
  return SHOC_ERR_INVALID_ARGUMENT;
}

void copy_string(const std::string& s, char* buf, std::size_t cap, std::size_t* needed) {
  if (needed) *needed = s.size();
  if (buf && cap > 0) {
    const std::size_t n = std::min(cap - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
}

shoc::Scheme to_scheme(int s) {
  switch (s) {
    case SHOC_SCHEME_CD2:
      return shoc::Scheme::Cd2;
    case SHOC_SCHEME_2SHOC:
      return shoc::Scheme::Shoc1x;
    case SHOC_SCHEME_2SHOC_MULTI:
      return shoc::Scheme::ShocMulti;
    case SHOC_SCHEME_WIDE4:
      return shoc::Scheme::Wide4;
    default:
      throw shoc::InvalidArgument("unknown scheme id " + std::to_string(s));
  }
}

int from_scheme(shoc::Scheme s) {
  switch (s) {
    case shoc::Scheme::Cd2:
      return SHOC_SCHEME_CD2;
    case shoc::Scheme::Shoc1x:
      return SHOC_SCHEME_2SHOC;
    case shoc::Scheme::ShocMulti:
      return SHOC_SCHEME_2SHOC_MULTI;
    case shoc::Scheme::Wide4:
      return SHOC_SCHEME_WIDE4;
  }
  return -1;
}

shoc_grid_info grid_info(const shoc::Grid& g) {
  shoc_grid_info out{};
  out.dim = g.dim();
  out.h = g.h();
  for (int a = 0; a < 3; ++a) {
    out.counts[a] = g.count(a);
    out.mins[a] = a < g.dim() ? g.min(a) : 0.0;
    out.maxs[a] = a < g.dim() ? g.max(a) : 0.0;
  }
  out.points = g.size();
  return out;
}

shoc_run_report to_c(const shoc::RunReport& r) {
  shoc_run_report out{};
  out.scheme = from_scheme(r.scheme);
  out.bc = r.bc == shoc::BoundaryKind::Msd ? SHOC_BC_MSD : SHOC_BC_DIRICHLET;
  out.grid.dim = r.dim;
  out.grid.h = r.h;
  for (int a = 0; a < 3; ++a) {
    out.grid.counts[a] = r.counts[a];
    out.grid.mins[a] = r.mins[a];
    out.grid.maxs[a] = r.maxs[a];
  }
  out.grid.points = r.points;
  out.k = r.k;
  out.k_max = r.bound.k_max;
  out.boundary_norm = r.bound.boundary_norm;
  out.interior_norm = r.bound.interior_norm;
  out.dominant = r.bound.dominant == shoc::DominantTerm::Boundary ? SHOC_DOMINANT_BOUNDARY
                                                                  : SHOC_DOMINANT_INTERIOR;
  out.steps = r.steps;
  out.rhs_calls = r.rhs_calls;
  out.snapshots_requested = std::size_t(r.snapshots_requested);
  out.snapshots_completed = r.snapshots.size();
  out.e_real = r.e_real;
  out.e_imag = r.e_imag;
  out.wall_seconds = r.wall_seconds;
  out.buffers = r.buffers;
  out.expected_buffers = r.expected_buffers;
  out.guarded_points = r.guarded_points;
  out.initial_sup = r.initial_sup;
  out.final_sup = r.final_sup;
  out.completed = r.completed ? 1 : 0;
  out.failure_step = r.failure_step;
  out.failure_time = r.failure_time;
  copy_string(r.failure, out.failure, sizeof(out.failure), nullptr);
  return out;
}

std::string instability_message(const shoc::RunReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), " at step %zu (t = %.6g), k / k_max = %.4g", r.failure_step,
                r.failure_time, r.k / r.bound.k_max);
  return r.failure + buf;
}

}  // namespace

extern "C" {

const char* shoc_version(void) { return "0.1.0"; }
const char* shoc_last_error(void) { return g_error.c_str(); }
const char* shoc_last_error_field(void) { return g_error_field.c_str(); }

const char* shoc_scheme_name(int scheme) {
  switch (scheme) {
    case SHOC_SCHEME_CD2:
      return "cd2";
    case SHOC_SCHEME_2SHOC:
      return "2shoc";
    case SHOC_SCHEME_2SHOC_MULTI:
      return "2shoc-multi";
    case SHOC_SCHEME_WIDE4:
      return "wide4";
    default:
      return "unknown";
  }
}

const char* shoc_bc_name(int bc) {
  return bc == SHOC_BC_MSD ? "msd" : bc == SHOC_BC_DIRICHLET ? "dirichlet" : "unknown";
}

const char* shoc_snapshot_policy(void) { return shoc::kSnapshotPolicy; }

shoc_status shoc_set_threads(int threads) {
  if (threads < 1) {
    set_error("threads must be >= 1");
    return SHOC_ERR_INVALID_ARGUMENT;
  }
  omp_set_num_threads(threads);
  return SHOC_OK;
}

shoc_status shoc_config_create(shoc_config** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new shoc_config();
    return SHOC_OK;
  });
}

void shoc_config_destroy(shoc_config* cfg) { delete cfg; }

shoc_status shoc_config_clone(const shoc_config* cfg, shoc_config** out) {
  if (!cfg) return null_argument("cfg");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new shoc_config(*cfg);
    return SHOC_OK;
  });
}

shoc_status shoc_config_load_file(shoc_config* cfg, const char* path) {
  if (!cfg) return null_argument("cfg");
  if (!path) return null_argument("path");
  return guarded([&] {
    for (auto& [key, value] : shoc::load_config_file(path)) cfg->raw[key] = value;
    return SHOC_OK;
  });
}

shoc_status shoc_config_set(shoc_config* cfg, const char* key, const char* value) {
  if (!cfg) return null_argument("cfg");
  if (!key) return null_argument("key");
  if (!value) return null_argument("value");
  return guarded([&] {
    const auto& keys = shoc::known_config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw shoc::ConfigError(key, "unknown configuration key");
    }
    cfg->raw[key] = value;
    return SHOC_OK;
  });
}

shoc_status shoc_config_validate(const shoc_config* cfg) {
  if (!cfg) return null_argument("cfg");
  return guarded([&] {
    shoc::resolve_config(cfg->raw);
    return SHOC_OK;
  });
}

shoc_status shoc_config_get(const shoc_config* cfg, const char* key, char* buf, size_t cap,
                            size_t* needed) {
  if (!cfg) return null_argument("cfg");
  if (!key) return null_argument("key");
  return guarded([&] {
    const shoc::ConfigMap resolved = shoc::resolve_config(cfg->raw).to_map();
    const auto it = resolved.find(key);
    if (it == resolved.end()) throw shoc::ConfigError(key, "no value for this key");
    copy_string(it->second, buf, cap, needed);
    return SHOC_OK;
  });
}

shoc_status shoc_config_resolved_text(const shoc_config* cfg, char* buf, size_t cap,
                                      size_t* needed) {
  if (!cfg) return null_argument("cfg");
  return guarded([&] {
    copy_string(shoc::format_config(shoc::resolve_config(cfg->raw).to_map()), buf, cap, needed);
    return SHOC_OK;
  });
}

shoc_status shoc_run_create(const shoc_config* cfg, double h, shoc_run** out) {
  if (!cfg) return null_argument("cfg");
  if (!out) return null_argument("out");
  return guarded([&] {
    shoc::RunConfig rc = shoc::resolve_config(cfg->raw);
    const double run_h = h > 0.0 ? h : rc.h;
    shoc::Grid grid = shoc::make_run_grid(rc, run_h);
    *out = new shoc_run{std::move(rc), run_h, std::move(grid), std::nullopt};
    return SHOC_OK;
  });
}

void shoc_run_destroy(shoc_run* run) { delete run; }

shoc_status shoc_run_grid(const shoc_run* run, shoc_grid_info* out) {
  if (!run) return null_argument("run");
  if (!out) return null_argument("out");
  *out = grid_info(run->grid);
  return SHOC_OK;
}

shoc_status shoc_run_execute(shoc_run* run, shoc_snapshot_fn fn, void* user) {
  if (!run) return null_argument("run");
  return guarded([&] {
    shoc::SnapshotObserver observer;
    if (fn) {
      observer = [&](const shoc::Simulation& sim, int index) {
        const shoc::ComplexField& psi = sim.psi();
        const auto* data = reinterpret_cast<const double*>(psi.data());
        if (fn(user, index, sim.time(), data, psi.size()) != 0) {
          throw shoc::IoError("snapshot callback failed at snapshot " + std::to_string(index));
        }
      };
    }
    run->report = shoc::run_and_measure(run->cfg, run->h, observer);
    if (!run->report->completed) {
      set_error(instability_message(*run->report));
      return SHOC_ERR_INSTABILITY;
    }
    return SHOC_OK;
  });
}

shoc_status shoc_run_report_get(const shoc_run* run, shoc_run_report* out) {
  if (!run) return null_argument("run");
  if (!out) return null_argument("out");
  if (!run->report) {
    set_error("run has not been executed");
    return SHOC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *out = to_c(*run->report);
    return SHOC_OK;
  });
}

shoc_status shoc_run_snapshot_errors(const shoc_run* run, double* t, double* e_real,
                                     double* e_imag, size_t cap, size_t* count) {
  if (!run) return null_argument("run");
  if (!run->report) {
    set_error("run has not been executed");
    return SHOC_ERR_INVALID_ARGUMENT;
  }
  const auto& snaps = run->report->snapshots;
  if (count) *count = snaps.size();
  const std::size_t n = std::min(cap, snaps.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (t) t[i] = snaps[i].t;
    if (e_real) e_real[i] = snaps[i].error.e_real;
    if (e_imag) e_imag[i] = snaps[i].error.e_imag;
  }
  return SHOC_OK;
}

shoc_status shoc_converge(const shoc_config* cfg, const double* hs, size_t n,
                          shoc_convergence_row* rows, int* has_overall, double* overall) {
  if (!cfg) return null_argument("cfg");
  if (!hs && n > 0) return null_argument("hs");
  if (!rows && n > 0) return null_argument("rows");
  return guarded([&] {
    const shoc::RunConfig rc = shoc::resolve_config(cfg->raw);
    const shoc::ConvergenceReport rep = shoc::run_convergence(rc, std::span<const double>(hs, n));
    bool failed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const shoc::ConvergenceRow& row = rep.rows[i];
      rows[i] = shoc_convergence_row{};
      rows[i].h = row.report.h;
      rows[i].report = to_c(row.report);
      rows[i].has_order = row.order_real && row.order_imag ? 1 : 0;
      rows[i].order_real = row.order_real.value_or(0.0);
      rows[i].order_imag = row.order_imag.value_or(0.0);
      if (!row.report.completed && !failed) {
        failed = true;
        set_error("h = " + std::to_string(row.report.h) + ": " + instability_message(row.report));
      }
    }
    if (has_overall) *has_overall = rep.overall ? 1 : 0;
    if (overall) *overall = rep.overall.value_or(0.0);
    return failed ? SHOC_ERR_INSTABILITY : SHOC_OK;
  });
}

shoc_status shoc_stability(const shoc_config* cfg, shoc_stability_info* out) {
  if (!cfg) return null_argument("cfg");
  if (!out) return null_argument("out");
  return guarded([&] {
    const shoc::RunConfig rc = shoc::resolve_config(cfg->raw);
    const shoc::Simulation sim(rc, rc.h);
    const shoc::StabilityBound& b = sim.bound();
    *out = shoc_stability_info{};
    out->grid = grid_info(sim.grid());
    out->k_max = b.k_max;
    out->k_chosen = sim.k();
    out->k_explicit = rc.k ? 1 : 0;
    out->boundary_norm = b.boundary_norm;
    out->interior_norm = b.interior_norm;
    out->dominant = b.dominant == shoc::DominantTerm::Boundary ? SHOC_DOMINANT_BOUNDARY
                                                               : SHOC_DOMINANT_INTERIOR;
    out->guarded_points = b.guarded_points;
    out->linear_bound = shoc::linear_dirichlet_bound(sim.grid().h(), rc.dim, rc.params.a);
    return SHOC_OK;
  });
}

shoc_status shoc_equivalence_check(int dim, int scheme, int trials, uint64_t seed,
                                   size_t points_per_axis, double* max_deviation) {
  if (!max_deviation) return null_argument("max_deviation");
  return guarded([&] {
    *max_deviation =
        shoc::equivalence_check(dim, to_scheme(scheme), trials, seed, points_per_axis)
            .max_deviation;
    return SHOC_OK;
  });
}

shoc_status shoc_cost_lookup(int dim, int scheme, shoc_cost_row* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const shoc::CostRow& r = shoc::cost_lookup(dim, to_scheme(scheme));
    *out = shoc_cost_row{r.dim,     from_scheme(r.scheme), r.laplacian_ops, r.laplacian_storage,
                         r.rk4_ops, r.rk4_storage};
    return SHOC_OK;
  });
}

shoc_status shoc_bench(const shoc_config* cfg, int scheme, int steps, shoc_bench_result* out) {
  if (!cfg) return null_argument("cfg");
  if (!out) return null_argument("out");
  return guarded([&] {
    const shoc::RunConfig rc = shoc::resolve_config(cfg->raw);
    const shoc::BenchResult r = shoc::bench(rc, to_scheme(scheme), steps);
    *out = shoc_bench_result{};
    out->scheme = from_scheme(r.scheme);
    out->points = r.points;
    out->steps = r.steps;
    out->seconds_per_step = r.seconds_per_step;
    out->ns_per_point_step = r.ns_per_point_step;
    out->storage_measured = r.storage.measured;
    out->storage_expected = r.storage.expected;
    out->allocations_during_steps = r.storage.allocations_during_steps;
    out->storage_ok = r.storage.ok() ? 1 : 0;
    return SHOC_OK;
  });
}

shoc_status shoc_order_between(double e1, double e2, double h1, double h2, int* defined,
                               double* order) {
  if (!defined) return null_argument("defined");
  if (!order) return null_argument("order");
  return guarded([&] {
    const std::optional<double> o = shoc::order_between(e1, e2, h1, h2);
    *defined = o ? 1 : 0;
    *order = o.value_or(0.0);
    return SHOC_OK;
  });
}

}  // extern "C"
