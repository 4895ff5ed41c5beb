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

#include "shoc/stability.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "shoc/error.hpp"
#include "shoc/nlse.hpp"

namespace shoc {

namespace {

constexpr std::array<int, 6> kG1 = {64, 63, 46, 12, -3, -4};
constexpr std::array<int, 12> kG2 = {128, 127, 126, 110, 109, 92, 24, 9, 8, -6, -7, -8};
constexpr std::array<int, 20> kG3 = {192, 191, 190, 189, 174, 173, 172, 156, 155, 138,
                                     36,  21,  20,  6,   5,   4,   -9,  -10, -11, -12};

}  // namespace

std::span<const int> stability_g_twelfths(int dim) {
  switch (dim) {
    case 1:
      return kG1;
    case 2:
      return kG2;
    case 3:
      return kG3;
    default:
      throw InvalidArgument("stability tables exist for dim 1, 2, 3 only");
  }
}

std::string_view to_string(DominantTerm term) noexcept {
  return term == DominantTerm::Boundary ? "boundary" : "interior";
}

StabilityBound stability_bound(const ComplexField& psi0, const RealField& potential,
                               const NlseParams& params, BoundaryKind bc) {
  validate(params);
  require_conformable(psi0, potential, "stability_bound");
  const Grid& g = psi0.grid();
  const double h2_over_a = g.h() * g.h() / params.a;

  // Interior: the extreme of |L - g| sits at an extreme of L and of G.
  const auto table = stability_g_twelfths(g.dim());
  const auto [g_lo, g_hi] = std::minmax_element(table.begin(), table.end());
  const double g_min = *g_lo / 12.0;
  const double g_max = *g_hi / 12.0;
  double l_min = 0.0, l_max = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Complex& u = psi0[i];
    const double l = h2_over_a * (params.s * std::norm(u) - potential[i]);
    if (i == 0 || l < l_min) l_min = l;
    if (i == 0 || l > l_max) l_max = l;
  }
  StabilityBound out;
  out.interior_norm = std::max(std::abs(l_max - g_min), std::abs(g_max - l_min));

  if (bc == BoundaryKind::Msd) {
    NlseOperator cd2(params, Scheme::Cd2, BoundaryKind::Msd, potential);
    ComplexField ut(g);
    cd2(psi0, ut);
    for (const BoundaryPoint& bp : cd2.boundary_map().points()) {
      const Complex& inner = psi0[bp.inner];
      if (std::abs(inner) < kMsdGuard) {
        ++out.guarded_points;
        continue;
      }
      out.boundary_norm = std::max(out.boundary_norm, h2_over_a * std::abs(ut[bp.inner] / inner));
    }
  }

  const double m = std::max(out.boundary_norm, out.interior_norm);
  out.dominant = out.boundary_norm > out.interior_norm ? DominantTerm::Boundary
                                                       : DominantTerm::Interior;
  out.k_max = std::sqrt(8.0) / m * h2_over_a;
  return out;
}

double linear_dirichlet_bound(double h, int dim, double a) {
  return 0.75 * h * h / (double(dim) * std::sqrt(2.0) * a);
}

double default_safety(int dim) noexcept { return dim == 1 ? 0.9 : 0.8; }

double choose_timestep(double k_max, int dim, std::optional<double> safety) {
  const double f = safety.value_or(default_safety(dim));
  if (!(f > 0.0)) throw InvalidArgument("time-step safety factor must be > 0");
  return f * k_max;
}

}  // namespace shoc
