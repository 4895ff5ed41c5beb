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

#include "shoc/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <random>

#include "shoc/error.hpp"

namespace shoc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr CostRow kCosts[] = {
    {1, Scheme::Wide4, 7, 1, 69, 5},      {1, Scheme::Shoc1x, 8, 2, 73, 6},
    {2, Scheme::Wide4, 9, 1, 77, 5},      {2, Scheme::ShocMulti, 15, 3, 101, 7},
    {2, Scheme::Shoc1x, 19, 2, 117, 6},   {3, Scheme::Wide4, 14, 1, 97, 5},
    {3, Scheme::ShocMulti, 22, 4, 129, 8}, {3, Scheme::Shoc1x, 31, 2, 165, 6},
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// A Simulation built while counting the fields it keeps alive.
struct AuditedSimulation {
  std::unique_ptr<Simulation> sim;
  std::size_t live_fields = 0;
};

AuditedSimulation build_audited(const RunConfig& cfg) {
  const FieldAllocationStats before = field_allocation_stats();
  AuditedSimulation out;
  out.sim = std::make_unique<Simulation>(cfg, cfg.h);
  out.live_fields = std::size_t(field_allocation_stats().live - before.live);
  return out;
}

double divisor_value(std::size_t n, ErrorDivisor divisor) {
  return divisor == ErrorDivisor::N ? double(n) : std::sqrt(double(n));
}

}  // namespace

SnapshotError snapshot_error(const ComplexField& psi, const ComplexField& exact,
                             ErrorDivisor divisor) {
  require_conformable(psi, exact, "snapshot_error");
  double sr = 0.0, si = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const Complex d = psi[i] - exact[i];
    sr += d.real() * d.real();
    si += d.imag() * d.imag();
  }
  const double n = divisor_value(psi.size(), divisor);
  return {std::sqrt(sr) / n, std::sqrt(si) / n};
}

SnapshotError snapshot_error(const ComplexField& psi, const ExactSolution& exact, double t,
                             ErrorDivisor divisor) {
  const Grid& g = psi.grid();
  if (g.dim() != dimension_of(exact)) {
    throw InvalidArgument("snapshot_error: grid dimension does not match the solution");
  }
  double sr = 0.0, si = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const Complex d = psi[i] - exact_value(exact, g.position(i), t);
    sr += d.real() * d.real();
    si += d.imag() * d.imag();
  }
  const double n = divisor_value(psi.size(), divisor);
  return {std::sqrt(sr) / n, std::sqrt(si) / n};
}

RunReport run_and_measure(const RunConfig& cfg, std::optional<double> h,
                          const SnapshotObserver& observer) {
  const auto start = Clock::now();
  RunConfig run_cfg = cfg;
  run_cfg.h = h.value_or(cfg.h);
  AuditedSimulation audited = build_audited(run_cfg);
  Simulation& sim = *audited.sim;
  const Grid& g = sim.grid();
  const std::optional<ExactSolution> exact = cfg.exact();

  RunReport rep;
  rep.scheme = cfg.scheme;
  rep.bc = cfg.bc;
  rep.dim = g.dim();
  rep.h = g.h();
  for (int a = 0; a < g.dim(); ++a) {
    rep.counts[a] = g.count(a);
    rep.mins[a] = g.min(a);
    rep.maxs[a] = g.max(a);
  }
  rep.points = g.size();
  rep.k = sim.k();
  rep.bound = sim.bound();
  rep.snapshots_requested = cfg.snapshots;
  rep.buffers = audited.live_fields;
  rep.expected_buffers = expected_rk4_storage(g.dim(), cfg.scheme);
  rep.initial_sup = sim.initial_sup();

  for (int j = 1; j <= cfg.snapshots; ++j) {
    const double t = cfg.t_end * double(j) / double(cfg.snapshots);
    try {
      sim.advance_to(t);
    } catch (const InstabilityError& e) {
      rep.failure = e.what();
      rep.failure_step = e.step();
      rep.failure_time = e.time();
      break;
    }
    SnapshotRecord rec{t, {kNaN, kNaN}};
    if (exact) rec.error = snapshot_error(sim.psi(), *exact, t, cfg.error_divisor);
    rep.snapshots.push_back(rec);
    if (observer) observer(sim, j);
  }
  rep.completed = rep.failure.empty();

  double sum_r = 0.0, sum_i = 0.0;
  for (const SnapshotRecord& s : rep.snapshots) {
    sum_r += s.error.e_real;
    sum_i += s.error.e_imag;
  }
  const double count = double(rep.snapshots.size());
  rep.e_real = rep.snapshots.empty() ? kNaN : sum_r / count;
  rep.e_imag = rep.snapshots.empty() ? kNaN : sum_i / count;

  rep.steps = sim.steps();
  rep.rhs_calls = sim.rhs_calls();
  rep.guarded_points = sim.rhs().diagnostics().guarded_points;
  rep.final_sup = sim.current_sup();
  rep.wall_seconds = seconds_since(start);
  return rep;
}

std::optional<double> order_between(double e1, double e2, double h1, double h2) {
  if (!(h2 > 0.0) || !(h1 > h2)) throw InvalidArgument("order_between: needs h1 > h2 > 0");
  if (!(e1 > 0.0) || !(e2 > 0.0) || !std::isfinite(e1) || !std::isfinite(e2)) {
    return std::nullopt;
  }
  return (std::log(e1) - std::log(e2)) / std::log(h1 / h2);
}

ConvergenceReport run_convergence(const RunConfig& cfg, std::span<const double> hs) {
  if (hs.empty()) throw InvalidArgument("run_convergence: empty h list");
  for (std::size_t i = 1; i < hs.size(); ++i) {
    if (!(hs[i] < hs[i - 1])) throw InvalidArgument("run_convergence: h must decrease");
  }
  ConvergenceReport out;
  std::vector<double> real_orders, imag_orders;
  bool all_orders = hs.size() >= 2;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    ConvergenceRow row;
    row.report = run_and_measure(cfg, hs[i]);
    if (i > 0) {
      const RunReport& prev = out.rows.back().report;
      const bool both = prev.completed && row.report.completed;
      if (both) {
        row.order_real = order_between(prev.e_real, row.report.e_real, hs[i - 1], hs[i]);
        row.order_imag = order_between(prev.e_imag, row.report.e_imag, hs[i - 1], hs[i]);
      }
      if (row.order_real && row.order_imag) {
        real_orders.push_back(*row.order_real);
        imag_orders.push_back(*row.order_imag);
      } else {
        all_orders = false;
      }
    }
    out.rows.push_back(std::move(row));
  }
  if (all_orders) out.overall = overall_order(real_orders, imag_orders);
  return out;
}

std::optional<double> overall_order(std::span<const double> real_orders,
                                    std::span<const double> imag_orders) {
  if (real_orders.empty() || real_orders.size() != imag_orders.size()) return std::nullopt;
  double sum = 0.0;
  for (std::size_t i = 0; i < real_orders.size(); ++i) {
    sum += 0.5 * (real_orders[i] + imag_orders[i]);
  }
  return sum / double(real_orders.size());
}

std::optional<double> overall_order(const ConvergenceReport& report) {
  std::vector<double> re, im;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const ConvergenceRow& row = report.rows[i];
    if (!row.order_real || !row.order_imag) return std::nullopt;
    re.push_back(*row.order_real);
    im.push_back(*row.order_imag);
  }
  return overall_order(re, im);
}

double relative_deviation(const ComplexField& a, const ComplexField& b, std::size_t min_depth) {
  require_conformable(a, b, "relative_deviation");
  const Grid& g = a.grid();
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (g.depth(g.unravel(i)) < min_depth) continue;
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
  }
  if (scale == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / scale;
}

EquivalenceResult equivalence_check(int dim, Scheme variant, int trials, std::uint64_t seed,
                                    std::size_t points_per_axis) {
  if (dim < 1 || dim > 3) throw InvalidArgument("equivalence_check: dim must be 1, 2 or 3");
  if (!is_two_step(variant)) throw InvalidArgument("equivalence_check: not a 2SHOC variant");
  if (trials < 1) throw InvalidArgument("equivalence_check: trials must be >= 1");
  if (points_per_axis == 0) points_per_axis = dim == 1 ? 65 : dim == 2 ? 33 : 17;

  const std::vector<double> mins(std::size_t(dim), 0.0);
  const std::vector<std::size_t> counts(std::size_t(dim), points_per_axis);
  const Grid grid(dim, mins, 1.0 / double(points_per_axis - 1), counts);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  ComplexField psi(grid), compact(grid), wide(grid);
  AuxFields aux(grid, variant);

  EquivalenceResult out;
  out.trials = trials;
  out.points_per_axis = points_per_axis;
  for (int t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const double re = uni(rng);
      psi[i] = Complex(re, uni(rng));
    }
    // Points at depth >= 2 read step-1 values only at depth >= 1, so the
    // boundary of aux never enters the comparison.
    shoc_step1(psi, aux);
    shoc_step2(psi, aux, variant, compact);
    wide4_laplacian(psi, wide);
    out.max_deviation = std::max(out.max_deviation, relative_deviation(compact, wide, 2));
  }
  return out;
}

std::span<const CostRow> cost_table() { return kCosts; }

const CostRow& cost_lookup(int dim, Scheme scheme) {
  for (const CostRow& row : kCosts) {
    if (row.dim == dim && row.scheme == scheme) return row;
  }
  throw InvalidArgument("no tabulated cost for " + std::string(to_string(scheme)) + " in " +
                        std::to_string(dim) + "D");
}

std::size_t expected_rk4_storage(int dim, Scheme scheme) {
  if (scheme == Scheme::Cd2) return 5;
  return std::size_t(cost_lookup(dim, scheme).rk4_storage);
}

StorageAudit storage_audit(const RunConfig& cfg, int steps) {
  if (steps < 0) throw InvalidArgument("storage_audit: steps must be >= 0");
  AuditedSimulation audited = build_audited(cfg);
  Simulation& sim = *audited.sim;
  StorageAudit out;
  out.measured = audited.live_fields;
  out.expected = expected_rk4_storage(cfg.dim, cfg.scheme);
  const long before = field_allocation_stats().total;
  for (int i = 0; i < steps; ++i) sim.advance_to(sim.time() + sim.k());
  out.allocations_during_steps = field_allocation_stats().total - before;
  return out;
}

StorageAudit laplacian_storage_audit(const Grid& grid, Scheme scheme) {
  const FieldAllocationStats before = field_allocation_stats();
  StorageAudit out;
  {
    ComplexField psi(grid);
    std::optional<AuxFields> aux;
    if (is_two_step(scheme)) aux.emplace(grid, scheme);
    out.measured = std::size_t(field_allocation_stats().live - before.live);

    ComplexField lap(grid);
    const long mark = field_allocation_stats().total;
    switch (scheme) {
      case Scheme::Cd2:
        cd2_laplacian(psi, lap);
        break;
      case Scheme::Wide4:
        wide4_laplacian(psi, lap);
        break;
      default:
        shoc_step1(psi, *aux);
        shoc_step2(psi, *aux, scheme, lap);
        break;
    }
    out.allocations_during_steps = field_allocation_stats().total - mark;
  }
  out.expected = scheme == Scheme::Cd2 ? 1 : std::size_t(cost_lookup(grid.dim(), scheme).laplacian_storage);
  return out;
}

BenchResult bench(const RunConfig& cfg, Scheme scheme, int steps) {
  if (steps < 1) throw InvalidArgument("bench: steps must be >= 1");
  RunConfig run_cfg = cfg;
  run_cfg.scheme = scheme;
  AuditedSimulation audited = build_audited(run_cfg);
  Simulation& sim = *audited.sim;

  BenchResult out;
  out.scheme = scheme;
  out.points = sim.grid().size();
  out.steps = steps;
  out.storage.measured = audited.live_fields;
  out.storage.expected = expected_rk4_storage(run_cfg.dim, scheme);

  const long before = field_allocation_stats().total;
  const auto start = Clock::now();
  for (int i = 0; i < steps; ++i) sim.advance_to(sim.time() + sim.k());
  const double elapsed = seconds_since(start);
  out.storage.allocations_during_steps = field_allocation_stats().total - before;
  out.seconds_per_step = elapsed / double(steps);
  out.ns_per_point_step = 1e9 * out.seconds_per_step / double(out.points);
  return out;
}

}  // namespace shoc
