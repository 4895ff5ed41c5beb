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

#include "shoc/rk4.hpp"

#include <cmath>
#include <limits>

#include "shoc/error.hpp"
#include "shoc/sweep.hpp"

namespace shoc {

Rk4Stepper::Rk4Stepper(const Grid& grid) : k_tot_(grid), k_tmp_(grid), psi_tmp_(grid) {}

double Rk4Stepper::step(ComplexField& psi, double k, const Rhs& rhs) {
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("rk4 step: k must be > 0");
  require_conformable(psi, k_tot_, "rk4 step");

  const std::size_t n = psi.size();
  Complex* u = psi.data();
  Complex* tot = k_tot_.data();
  Complex* tmp = k_tmp_.data();
  Complex* ut = psi_tmp_.data();
  const double half_k = 0.5 * k;
  const double sixth_k = k / 6.0;

  rhs(psi, k_tot_);
  detail::for_each_point(n, [&](std::size_t i) { ut[i] = u[i] + half_k * tot[i]; });
  rhs(psi_tmp_, k_tmp_);
  detail::for_each_point(n, [&](std::size_t i) {
    tot[i] += 2.0 * tmp[i];
    ut[i] = u[i] + half_k * tmp[i];
  });
  rhs(psi_tmp_, k_tmp_);
  detail::for_each_point(n, [&](std::size_t i) {
    tot[i] += 2.0 * tmp[i];
    ut[i] = u[i] + k * tmp[i];
  });
  rhs(psi_tmp_, k_tmp_);
  rhs_calls_ += 4;

  double max_mod2 = 0.0;
  bool bad = false;
  const long count = long(n);
#pragma omp parallel for schedule(static) reduction(max : max_mod2) reduction(|| : bad)
  for (long j = 0; j < count; ++j) {
    const std::size_t i = std::size_t(j);
    u[i] += sixth_k * (tot[i] + tmp[i]);
    const double m2 = u[i].real() * u[i].real() + u[i].imag() * u[i].imag();
    if (!(m2 <= std::numeric_limits<double>::max())) bad = true;
    else if (m2 > max_mod2) max_mod2 = m2;
  }
  ++steps_;
  return bad ? std::numeric_limits<double>::infinity() : max_mod2;
}

}  // namespace shoc
