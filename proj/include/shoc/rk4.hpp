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
#include <functional>

#include "shoc/grid.hpp"

namespace shoc {

/// Classic four-stage Runge-Kutta with exactly three stage buffers:
///
///   1) Ktot = F(u)            6) Ktmp = F(utmp)
///   2) utmp = u + k/2 Ktot    7) Ktot = Ktot + 2 Ktmp
///   3) Ktmp = F(utmp)         8) utmp = u + k Ktmp
///   4) Ktot = Ktot + 2 Ktmp   9) Ktmp = F(utmp)
///   5) utmp = u + k/2 Ktmp   10) u = u + k/6 (Ktot + Ktmp)
class Rk4Stepper {
 public:
  using Rhs = std::function<void(const ComplexField& in, ComplexField& out)>;
  static constexpr std::size_t kStageBuffers = 3;

  explicit Rk4Stepper(const Grid& grid);

  /// Advances `psi` in place by `k` (> 0). Returns max |psi|^2 after the
  /// update, or +inf if any value became non-finite.
  double step(ComplexField& psi, double k, const Rhs& rhs);

  std::size_t rhs_calls() const noexcept { return rhs_calls_; }
  std::size_t steps() const noexcept { return steps_; }

 private:
  ComplexField k_tot_;
  ComplexField k_tmp_;
  ComplexField psi_tmp_;
  std::size_t rhs_calls_ = 0;
  std::size_t steps_ = 0;
};

}  // namespace shoc
