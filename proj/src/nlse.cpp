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

#include "shoc/nlse.hpp"

#include <cmath>
#include <string>

#include "shoc/error.hpp"
#include "shoc/sweep.hpp"

namespace shoc {

void validate(const NlseParams& params) {
  if (!(params.a > 0.0) || !std::isfinite(params.a)) {
    throw InvalidArgument("dispersion coefficient a must be > 0");
  }
  if (!std::isfinite(params.s)) throw InvalidArgument("nonlinearity s must be finite");
  const Potential& v = params.potential;
  if (v.kind == Potential::Kind::Harmonic && v.coefficient && !std::isfinite(*v.coefficient)) {
    throw InvalidArgument("harmonic potential coefficient must be finite");
  }
  if (v.kind == Potential::Kind::Tabulated && !v.table) {
    throw InvalidArgument("tabulated potential has no table");
  }
}

RealField build_potential(const Grid& grid, const NlseParams& params) {
  validate(params);
  const Potential& v = params.potential;
  switch (v.kind) {
    case Potential::Kind::None:
      return RealField(grid, 0.0);
    case Potential::Kind::Harmonic: {
      RealField out(grid);
      const double coeff = v.coefficient.value_or(1.0 / params.a);
      for (std::size_t p = 0; p < grid.size(); ++p) {
        const Point3 r = grid.position(p);
        out[p] = coeff * (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
      }
      return out;
    }
    case Potential::Kind::Tabulated:
      if (!(v.table->grid() == grid)) {
        throw InvalidArgument("tabulated potential is not conformable with the simulation grid");
      }
      if (!all_finite(*v.table)) throw InvalidArgument("tabulated potential has non-finite values");
      return RealField(*v.table);
  }
  return RealField(grid, 0.0);
}

NlseOperator::NlseOperator(const NlseParams& params, Scheme scheme, BoundaryKind bc,
                           const RealField& potential)
    : params_(params), scheme_(scheme), bc_(bc), potential_(potential), map_(potential.grid()) {
  validate(params_);
  if (scheme == Scheme::Wide4) {
    throw InvalidArgument("wide4 has no boundary treatment and cannot drive a time integration");
  }
  if (scheme == Scheme::ShocMulti && bc == BoundaryKind::Msd) {
    throw InvalidArgument("the MSD boundary condition is not defined for 2shoc-multi");
  }
  if (is_two_step(scheme)) aux_.emplace(potential.grid(), scheme);
}

namespace {

// i (a L + N psi), N = s |psi|^2 - V
inline Complex nlse_value(const Complex& lap, const Complex& u, double v, double a, double s) {
  const double n = s * (u.real() * u.real() + u.imag() * u.imag()) - v;
  const double re = a * lap.real() + n * u.real();
  const double im = a * lap.imag() + n * u.imag();
  return Complex(-im, re);
}

}  // namespace

void NlseOperator::operator()(const ComplexField& psi, ComplexField& out) {
  require_conformable(psi, potential_, "nlse rhs");
  require_conformable(psi, out, "nlse rhs");
  const Grid& g = psi.grid();
  const detail::StencilConstants c(g);
  const Complex* u = psi.data();
  const double* v = potential_.data();
  Complex* o = out.data();
  const double a = params_.a;
  const double s = params_.s;

  if (scheme_ == Scheme::Cd2) {
    detail::with_dim(g.dim(), [&]<int D>() {
      detail::for_each_interior(g, [&](std::size_t p) {
        o[p] = nlse_value(detail::cd2_at<D>(u, p, c), u[p], v[p], a, s);
      });
    });
  } else {
    AuxFields& aux = *aux_;
    shoc_step1(psi, aux);
    diagnostics_ += fill_lap_bc(aux, psi, potential_, params_, bc_, map_);
    if (scheme_ == Scheme::Shoc1x) {
      const Complex* d = aux[0].data();
      detail::with_dim(g.dim(), [&]<int D>() {
        detail::for_each_interior(g, [&](std::size_t p) {
          o[p] = nlse_value(detail::shoc1x_step2_at<D>(u, d, p, c), u[p], v[p], a, s);
        });
      });
    } else {
      const Complex* d[3] = {aux[0].data(), aux.count() > 1 ? aux[1].data() : nullptr,
                             aux.count() > 2 ? aux[2].data() : nullptr};
      detail::with_dim(g.dim(), [&]<int D>() {
        detail::for_each_interior(g, [&](std::size_t p) {
          o[p] = nlse_value(detail::shoc_multi_step2_at<D>(d, p, c), u[p], v[p], a, s);
        });
      });
    }
  }
  diagnostics_ += fill_ut_bc(out, psi, bc_, map_);
  ++evaluations_;
}

}  // namespace shoc
