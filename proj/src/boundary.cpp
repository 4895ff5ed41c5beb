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

#include "shoc/boundary.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <string>

#include "shoc/error.hpp"

namespace shoc {

std::string_view to_string(BoundaryKind kind) noexcept {
  return kind == BoundaryKind::Dirichlet ? "dirichlet" : "msd";
}

std::optional<BoundaryKind> parse_boundary_kind(std::string_view text) noexcept {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char ch) { return char(std::tolower(ch)); });
  if (t == "dirichlet") return BoundaryKind::Dirichlet;
  if (t == "msd") return BoundaryKind::Msd;
  return std::nullopt;
}

BoundaryMap::BoundaryMap(const Grid& grid) {
  const int dim = grid.dim();
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const Index3 idx = grid.unravel(p);
    unsigned mask = 0;
    for (int a = 0; a < dim; ++a) {
      if (idx[a] == 0 || idx[a] + 1 == grid.count(a)) mask |= 1u << a;
    }
    if (mask == 0) continue;
    const int owner = std::countr_zero(mask);
    const std::size_t s = grid.stride(owner);
    const std::size_t inner = idx[owner] == 0 ? p + s : p - s;
    points_.push_back({p, inner, owner, mask});
  }
  std::stable_sort(points_.begin(), points_.end(), [](const BoundaryPoint& l, const BoundaryPoint& r) {
    return std::popcount(l.boundary_mask) < std::popcount(r.boundary_mask);
  });
}

namespace {

inline double modulus2(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline double nonlinear_term(const Complex& psi, double v, double s) {
  return s * modulus2(psi) - v;
}

inline Complex dirichlet_laplacian(const Complex& psi, double v, const NlseParams& params) {
  return -(nonlinear_term(psi, v, params.s) / params.a) * psi;
}

}  // namespace

BoundaryDiagnostics fill_lap_bc(ComplexField& d_lap, const ComplexField& psi,
                                const RealField& potential, const NlseParams& params,
                                BoundaryKind kind, const BoundaryMap& map) {
  require_conformable(d_lap, psi, "fill_lap_bc");
  require_conformable(psi, potential, "fill_lap_bc");
  BoundaryDiagnostics diag;
  Complex* d = d_lap.data();
  const Complex* u = psi.data();
  const double* v = potential.data();
  if (kind == BoundaryKind::Dirichlet) {
    for (const BoundaryPoint& bp : map.points()) {
      d[bp.flat] = dirichlet_laplacian(u[bp.flat], v[bp.flat], params);
    }
    return diag;
  }
  const double inv_a = 1.0 / params.a;
  for (const BoundaryPoint& bp : map.points()) {
    const Complex& inner = u[bp.inner];
    if (std::abs(inner) < kMsdGuard) {
      d[bp.flat] = Complex(0.0, 0.0);
      ++diag.guarded_points;
      continue;
    }
    // Im(i z) == Re(z)
    const double ratio = (d[bp.inner] / inner).real();
    const double dn = nonlinear_term(inner, v[bp.inner], params.s) -
                      nonlinear_term(u[bp.flat], v[bp.flat], params.s);
    d[bp.flat] = (ratio + dn * inv_a) * u[bp.flat];
  }
  return diag;
}

BoundaryDiagnostics fill_lap_bc(AuxFields& aux, const ComplexField& psi,
                                const RealField& potential, const NlseParams& params,
                                BoundaryKind kind, const BoundaryMap& map) {
  if (aux.variant() == Scheme::Shoc1x) {
    return fill_lap_bc(aux[0], psi, potential, params, kind, map);
  }
  if (kind == BoundaryKind::Msd) {
    throw InvalidArgument("the MSD boundary condition is not defined for 2shoc-multi");
  }
  require_conformable(psi, potential, "fill_lap_bc");
  const Complex* u = psi.data();
  const double* v = potential.data();
  assign_boundary_laplacian(aux, psi, map, [&](const BoundaryPoint& bp) {
    return dirichlet_laplacian(u[bp.flat], v[bp.flat], params);
  });
  return {};
}

BoundaryDiagnostics fill_ut_bc(ComplexField& ut, const ComplexField& psi, BoundaryKind kind,
                               const BoundaryMap& map) {
  require_conformable(ut, psi, "fill_ut_bc");
  BoundaryDiagnostics diag;
  Complex* t = ut.data();
  if (kind == BoundaryKind::Dirichlet) {
    for (const BoundaryPoint& bp : map.points()) t[bp.flat] = Complex(0.0, 0.0);
    return diag;
  }
  const Complex* u = psi.data();
  for (const BoundaryPoint& bp : map.points()) {
    const Complex& inner = u[bp.inner];
    if (std::abs(inner) < kMsdGuard) {
      t[bp.flat] = Complex(0.0, 0.0);
      ++diag.guarded_points;
      continue;
    }
    const double omega = (t[bp.inner] / inner).imag();
    const Complex& b = u[bp.flat];
    t[bp.flat] = Complex(-omega * b.imag(), omega * b.real());
  }
  return diag;
}

}  // namespace shoc
