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

#pragma once

#include <cstddef>
#include <string>

#include "shoc/config.hpp"
#include "shoc/grid.hpp"
#include "shoc/nlse.hpp"
#include "shoc/rk4.hpp"
#include "shoc/stability.hpp"

namespace shoc {

/// Grid for a resolved config at spacing h: the snapped auto domain, or the
/// explicit extents.
Grid make_run_grid(const RunConfig& cfg, double h);

/// Reads a field from CSV, one row per grid point in flat order. With a
/// header row the "re" and "im" columns are used, otherwise the last two.
/// Lines starting with '#' are skipped.
ComplexField read_complex_csv(const std::string& path, const Grid& grid);
/// Same for a real field: column "v", or the last column.
RealField read_real_csv(const std::string& path, const Grid& grid);

/// One NLSE run at spacing h: owns psi, V, the operator and the RK4 stepper.
/// The stability bound is evaluated once, at construction.
class Simulation {
 public:
  Simulation(const RunConfig& cfg, double h);

  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  /// Steps with the fixed k until t; the last step is shortened to land on t
  /// exactly. Throws InstabilityError if the solution turns non-finite or its
  /// sup-norm exceeds blowup_factor times the initial one, or if a periodic
  /// re-check finds k above the current bound.
  void advance_to(double t);

  const RunConfig& config() const noexcept { return cfg_; }
  const Grid& grid() const noexcept { return grid_; }
  const ComplexField& psi() const noexcept { return psi_; }
  const RealField& potential() const noexcept { return potential_; }
  const NlseOperator& rhs() const noexcept { return op_; }
  const StabilityBound& bound() const noexcept { return bound_; }

  double time() const noexcept { return time_; }
  double k() const noexcept { return k_; }
  std::size_t steps() const noexcept { return stepper_.steps(); }
  std::size_t rhs_calls() const noexcept { return stepper_.rhs_calls(); }
  double initial_sup() const noexcept { return initial_sup_; }
  double current_sup() const noexcept { return current_sup_; }

  /// N-sized buffers held for the lifetime of the run: psi, V, three stage
  /// buffers and the scheme's auxiliary fields.
  std::size_t persistent_fields() const noexcept {
    return 2 + Rk4Stepper::kStageBuffers + op_.aux_count();
  }

 private:
  RunConfig cfg_;
  Grid grid_;
  RealField potential_;
  ComplexField psi_;
  NlseOperator op_;
  Rk4Stepper stepper_;
  StabilityBound bound_;
  double k_ = 0.0;
  double time_ = 0.0;
  double initial_sup_ = 0.0;
  double current_sup_ = 0.0;
};

}  // namespace shoc
