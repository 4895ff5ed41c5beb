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

// Boundary fills for the NLSE pipeline.
//
// Two fills are needed per right-hand-side evaluation: the step-1 Laplacian
// field D of a 2SHOC scheme (read by step 2 at boundary-adjacent points), and
// the time derivative psi_t itself. Both Dirichlet (psi fixed) and
// modulus-squared Dirichlet (|psi|^2 fixed, "MSD") are supported.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "shoc/grid.hpp"
#include "shoc/nlse_params.hpp"
#include "shoc/stencils.hpp"

namespace shoc {

enum class BoundaryKind { Dirichlet, Msd };

std::string_view to_string(BoundaryKind kind) noexcept;
std::optional<BoundaryKind> parse_boundary_kind(std::string_view text) noexcept;

/// MSD divides by psi at the neighbouring interior point; below this modulus
/// the boundary value is set to zero and the point is counted as guarded.
inline constexpr double kMsdGuard = 1e-12;

struct BoundaryPoint {
  std::size_t flat;
  /// Neighbour one step inward along the owner axis (the "b-1" point).
  std::size_t inner;
  /// Lowest axis on which the point touches the boundary (x before y before z).
  int owner_axis;
  /// Bit a set when the point is on the boundary of axis a.
  unsigned boundary_mask;
};

/// All boundary points of a grid, faces first, then edges, then corners. An
/// edge or corner point's inner neighbour is itself a boundary point of a
/// lower class, so a single pass in this order only reads filled values.
class BoundaryMap {
 public:
  explicit BoundaryMap(const Grid& grid);

  std::span<const BoundaryPoint> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<BoundaryPoint> points_;
};

struct BoundaryDiagnostics {
  std::size_t guarded_points = 0;

  BoundaryDiagnostics& operator+=(const BoundaryDiagnostics& o) noexcept {
    guarded_points += o.guarded_points;
    return *this;
  }
};

/// Boundary values of the Laplacian field `d_lap` (a single combined field).
///   Dirichlet: lap psi_b = -(s |psi_b|^2 - V_b) psi_b / a
///   MSD:       lap psi_b = [Re(lap psi_{b-1} / psi_{b-1}) + (N_{b-1} - N_b) / a] psi_b
/// with N = s |psi|^2 - V. MSD reads the interior of `d_lap`, which must
/// already be computed.
BoundaryDiagnostics fill_lap_bc(ComplexField& d_lap, const ComplexField& psi,
                                const RealField& potential, const NlseParams& params,
                                BoundaryKind kind, const BoundaryMap& map);

/// Same, on the step-1 output of a 2SHOC scheme. For SHOC-MULTI only
/// Dirichlet is supported; the per-axis split follows assign_boundary_laplacian.
BoundaryDiagnostics fill_lap_bc(AuxFields& aux, const ComplexField& psi,
                                const RealField& potential, const NlseParams& params,
                                BoundaryKind kind, const BoundaryMap& map);

/// Boundary values of the time derivative.
///   Dirichlet: psi_t,b = 0
///   MSD:       psi_t,b = i Im(psi_t,{b-1} / psi_{b-1}) psi_b
BoundaryDiagnostics fill_ut_bc(ComplexField& ut, const ComplexField& psi, BoundaryKind kind,
                               const BoundaryMap& map);

/// Writes a prescribed total boundary Laplacian into step-1 storage. For
/// SHOC-1X the value goes straight into D. For SHOC-MULTI each boundary point
/// gets the central difference of psi along every tangential axis on which it
/// is interior (0 otherwise), and the owner axis takes the remainder, so that
/// the per-axis fields sum to the prescribed value.
template <class TotalFn>
void assign_boundary_laplacian(AuxFields& aux, const ComplexField& psi, const BoundaryMap& map,
                               TotalFn&& total);

}  // namespace shoc

template <class TotalFn>
void shoc::assign_boundary_laplacian(AuxFields& aux, const ComplexField& psi,
                                     const BoundaryMap& map, TotalFn&& total) {
  if (aux.variant() == Scheme::Shoc1x) {
    Complex* d = aux[0].data();
    for (const BoundaryPoint& bp : map.points()) d[bp.flat] = total(bp);
    return;
  }
  const Grid& g = psi.grid();
  const detail::StencilConstants c(g);
  const Complex* in = psi.data();
  const int dim = g.dim();
  for (const BoundaryPoint& bp : map.points()) {
    Complex rest{0.0, 0.0};
    for (int t = 0; t < dim; ++t) {
      if (t == bp.owner_axis) continue;
      Complex v{0.0, 0.0};
      if ((bp.boundary_mask & (1u << t)) == 0u) v = detail::cd2_axis_at(in, bp.flat, c.s[t], c);
      aux[std::size_t(t)][bp.flat] = v;
      rest += v;
    }
    aux[std::size_t(bp.owner_axis)][bp.flat] = total(bp) - rest;
  }
}
