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

#include <memory>
#include <optional>

#include "shoc/grid.hpp"

namespace shoc {

/// External potential V(r).
struct Potential {
  enum class Kind { None, Harmonic, Tabulated };

  Kind kind = Kind::None;
  /// Harmonic: V = coefficient * |r|^2. Unset means 1/a.
  std::optional<double> coefficient;
  /// Tabulated: sampled values; must live on the simulation grid.
  std::shared_ptr<const RealField> table;

  static Potential none() { return {}; }
  static Potential harmonic(std::optional<double> coefficient = std::nullopt) {
    return {Kind::Harmonic, coefficient, nullptr};
  }
  static Potential tabulated(std::shared_ptr<const RealField> table) {
    return {Kind::Tabulated, std::nullopt, std::move(table)};
  }
};

/// Coefficients of  i psi_t + a lap(psi) - V psi + s |psi|^2 psi = 0.
struct NlseParams {
  double a = 1.0;  ///< dispersion, > 0
  double s = 0.0;  ///< nonlinearity; < 0 defocusing, > 0 focusing
  Potential potential;
};

/// Throws InvalidArgument if a <= 0 or a coefficient is not finite.
void validate(const NlseParams& params);

}  // namespace shoc
