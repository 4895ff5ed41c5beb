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

// Error metrics, convergence sweeps, the wide-stencil equivalence driver and
// the static cost model.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shoc/analytic.hpp"
#include "shoc/boundary.hpp"
#include "shoc/config.hpp"
#include "shoc/simulation.hpp"
#include "shoc/stability.hpp"
#include "shoc/stencils.hpp"

namespace shoc {

struct SnapshotError {
  double e_real = 0.0;
  double e_imag = 0.0;
};

/// ||Re(psi - exact)||_2 / sqrt(N) (or / N) and the same for the imaginary
/// part, summed serially in flat order.
SnapshotError snapshot_error(const ComplexField& psi, const ComplexField& exact,
                             ErrorDivisor divisor = ErrorDivisor::SqrtN);
/// Same, sampling the exact solution pointwise at time t.
SnapshotError snapshot_error(const ComplexField& psi, const ExactSolution& exact, double t,
                             ErrorDivisor divisor = ErrorDivisor::SqrtN);

struct SnapshotRecord {
  double t = 0.0;
  SnapshotError error;
};

inline constexpr const char* kSnapshotPolicy =
    "t_j = j * t_end / K for j = 1..K; t = 0 excluded";

struct RunReport {
  Scheme scheme = Scheme::Shoc1x;
  BoundaryKind bc = BoundaryKind::Dirichlet;
  int dim = 1;
  double h = 0.0;
  std::array<std::size_t, 3> counts{1, 1, 1};
  std::array<double, 3> mins{};
  std::array<double, 3> maxs{};
  std::size_t points = 0;

  double k = 0.0;
  StabilityBound bound;
  std::size_t steps = 0;
  std::size_t rhs_calls = 0;

  /// One entry per completed snapshot. Errors are NaN without an exact solution.
  std::vector<SnapshotRecord> snapshots;
  int snapshots_requested = 0;
  /// Mean of the per-snapshot errors.
  double e_real = 0.0;
  double e_imag = 0.0;

  double wall_seconds = 0.0;
  std::size_t buffers = 0;
  std::size_t expected_buffers = 0;
  std::size_t guarded_points = 0;
  double initial_sup = 0.0;
  double final_sup = 0.0;

  bool completed = false;
  std::string failure;
  std::size_t failure_step = 0;
  double failure_time = 0.0;
  std::string snapshot_policy = kSnapshotPolicy;
};

/// Called after every snapshot with its 1-based index.
using SnapshotObserver = std::function<void(const Simulation& sim, int index)>;

/// Integrates cfg at spacing h (cfg.h if unset) to cfg.t_end, measuring the
/// error at every snapshot. Instability ends the run early; the partial
/// report has completed = false and the failure details filled in.
RunReport run_and_measure(const RunConfig& cfg, std::optional<double> h = std::nullopt,
                          const SnapshotObserver& observer = {});

/// (ln E1 - ln E2) / ln(h1 / h2). Empty when either error is zero or not
/// finite. Throws InvalidArgument unless h1 > h2 > 0.
std::optional<double> order_between(double e1, double e2, double h1, double h2);

struct ConvergenceRow {
  RunReport report;
  /// Order against the previous (coarser) row.
  std::optional<double> order_real;
  std::optional<double> order_imag;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  /// Mean over consecutive pairs of (order_real + order_imag) / 2.
  std::optional<double> overall;
};

/// One run per h (strictly decreasing).
ConvergenceReport run_convergence(const RunConfig& cfg, std::span<const double> hs);

std::optional<double> overall_order(std::span<const double> real_orders,
                                    std::span<const double> imag_orders);
std::optional<double> overall_order(const ConvergenceReport& report);

/// max |a - b| / max(||a||_inf, ||b||_inf) over points at least `min_depth`
/// layers from the boundary; 0 when both are zero there.
double relative_deviation(const ComplexField& a, const ComplexField& b, std::size_t min_depth);

struct EquivalenceResult {
  double max_deviation = 0.0;
  int trials = 0;
  std::size_t points_per_axis = 0;
};

/// Random complex fields on [0, 1]^dim: compares the 2SHOC `variant` against
/// the wide stencil on the depth >= 2 interior. points_per_axis = 0 picks
/// 65 / 33 / 17 for dim 1 / 2 / 3.
EquivalenceResult equivalence_check(int dim, Scheme variant, int trials, std::uint64_t seed,
                                    std::size_t points_per_axis = 0);

struct CostRow {
  int dim;
  Scheme scheme;
  int laplacian_ops;      ///< per point
  int laplacian_storage;  ///< multiples of N
  int rk4_ops;            ///< per point per step: 4 (laplacian + 7) + 13
  int rk4_storage;        ///< multiples of N
};

/// The tabulated operation counts and storage. Throws InvalidArgument for
/// combinations outside the tables (CD2, or SHOC-MULTI in 1D).
const CostRow& cost_lookup(int dim, Scheme scheme);
std::span<const CostRow> cost_table();

/// Persistent N-sized buffers an RK4 run needs: the tabulated value, or 5 for
/// the non-compact CD2 scheme.
std::size_t expected_rk4_storage(int dim, Scheme scheme);

struct StorageAudit {
  std::size_t measured = 0;
  std::size_t expected = 0;
  /// Field allocations observed while stepping (must be zero).
  long allocations_during_steps = 0;
  bool ok() const noexcept { return measured == expected && allocations_during_steps == 0; }
};

/// Counts the live fields a Simulation holds and checks that `steps` RK4
/// steps allocate none.
StorageAudit storage_audit(const RunConfig& cfg, int steps);

/// Fields a single Laplacian evaluation keeps besides its output: psi plus
/// the auxiliary fields.
StorageAudit laplacian_storage_audit(const Grid& grid, Scheme scheme);

struct BenchResult {
  Scheme scheme = Scheme::Shoc1x;
  std::size_t points = 0;
  int steps = 0;
  double seconds_per_step = 0.0;
  double ns_per_point_step = 0.0;
  StorageAudit storage;
};

/// Times `steps` RK4 steps of cfg with the given scheme.
BenchResult bench(const RunConfig& cfg, Scheme scheme, int steps);

}  // namespace shoc
