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

// Time-step bounds for RK4 with the fourth-order compact Laplacian.
//
// The linearized bound treats |psi|^2 (and the MSD boundary terms) as frozen
// at the initial condition:
//
//   k < sqrt(8) / M * h^2 / a,
//   M = max( max_b |B_b|, max_{i, g in G(d)} |L_i - g| ),
//   L_i = h^2 / a * (s |psi_i|^2 - V_i),
//
// where G(d) is a fixed set of twelfths per dimension and B_b is zero for
// Dirichlet and h^2 / (i a) * psi_t,{b-1} / psi_{b-1} for MSD. In the linear
// Dirichlet case this reduces to k < (3/4) h^2 / (d sqrt(2) a).

#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "shoc/boundary.hpp"
#include "shoc/grid.hpp"
#include "shoc/nlse_params.hpp"

namespace shoc {

/// Numerators of G(d); every entry is divided by 12.
std::span<const int> stability_g_twelfths(int dim);

enum class DominantTerm { Boundary, Interior };
std::string_view to_string(DominantTerm term) noexcept;

struct StabilityBound {
  double k_max = 0.0;
  double boundary_norm = 0.0;  ///< max_b |B_b|
  double interior_norm = 0.0;  ///< max_{i,g} |L_i - g|
  DominantTerm dominant = DominantTerm::Interior;
  std::size_t guarded_points = 0;
};

/// Linearized bound about `psi0`. For MSD the boundary term uses the CD2
/// right-hand side of `psi0`. The G tables belong to the fourth-order scheme;
/// CD2 runs use the same (conservative) value.
StabilityBound stability_bound(const ComplexField& psi0, const RealField& potential,
                               const NlseParams& params, BoundaryKind bc);

/// (3/4) h^2 / (d sqrt(2) a): linear, V = 0, Dirichlet.
double linear_dirichlet_bound(double h, int dim, double a);

/// Default safety factor: 0.9 in 1D, 0.8 otherwise.
double default_safety(int dim) noexcept;

/// safety * k_max, with `safety` defaulting per default_safety().
double choose_timestep(double k_max, int dim, std::optional<double> safety = std::nullopt);

}  // namespace shoc
