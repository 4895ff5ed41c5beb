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

#include "shoc/stencils.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>

#include "shoc/error.hpp"
#include "shoc/sweep.hpp"

namespace shoc {

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::Cd2:
      return "cd2";
    case Scheme::Shoc1x:
      return "2shoc";
    case Scheme::ShocMulti:
      return "2shoc-multi";
    case Scheme::Wide4:
      return "wide4";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view text) noexcept {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char ch) { return char(std::tolower(ch)); });
  if (t == "cd2" || t == "cd") return Scheme::Cd2;
  if (t == "2shoc" || t == "2shoc-1x" || t == "shoc-1x") return Scheme::Shoc1x;
  if (t == "2shoc-multi" || t == "shoc-multi") return Scheme::ShocMulti;
  if (t == "wide4") return Scheme::Wide4;
  return std::nullopt;
}

std::size_t aux_field_count(Scheme scheme, int dim) noexcept {
  switch (scheme) {
    case Scheme::Shoc1x:
      return 1;
    case Scheme::ShocMulti:
      return std::size_t(dim);
    default:
      return 0;
  }
}

AuxFields::AuxFields(const Grid& grid, Scheme variant) : variant_(variant) {
  if (!is_two_step(variant)) {
    throw InvalidArgument("auxiliary fields exist only for the two-step schemes");
  }
  if (variant == Scheme::ShocMulti && grid.dim() < 2) {
    throw InvalidArgument("2shoc-multi needs dim >= 2 (in 1D it coincides with 2shoc)");
  }
  const std::size_t n = aux_field_count(variant, grid.dim());
  fields_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) fields_.emplace_back(grid);
}

void cd2_laplacian(const ComplexField& psi, ComplexField& out) {
  require_conformable(psi, out, "cd2_laplacian");
  const detail::StencilConstants c(psi.grid());
  const Complex* in = psi.data();
  Complex* o = out.data();
  detail::with_dim(psi.grid().dim(), [&]<int D>() {
    detail::for_each_interior(psi.grid(),
                              [&](std::size_t p) { o[p] = detail::cd2_at<D>(in, p, c); });
  });
}

ComplexField cd2_laplacian(const ComplexField& psi) {
  ComplexField out(psi.grid());
  cd2_laplacian(psi, out);
  return out;
}

void shoc_step1(const ComplexField& psi, AuxFields& aux) {
  require_conformable(psi, aux[0], "shoc_step1");
  const detail::StencilConstants c(psi.grid());
  const Complex* in = psi.data();
  if (aux.variant() == Scheme::Shoc1x) {
    cd2_laplacian(psi, aux[0]);
    return;
  }
  for (std::size_t a = 0; a < aux.count(); ++a) {
    Complex* d = aux[a].data();
    const std::size_t s = c.s[a];
    detail::for_each_interior(psi.grid(),
                              [&](std::size_t p) { d[p] = detail::cd2_axis_at(in, p, s, c); });
  }
}

void shoc_step2(const ComplexField& psi, const AuxFields& aux, Scheme variant, ComplexField& out) {
  if (aux.variant() != variant) {
    throw InvalidArgument("shoc_step2: aux fields were produced for " +
                          std::string(to_string(aux.variant())) + ", not " +
                          std::string(to_string(variant)));
  }
  require_conformable(psi, out, "shoc_step2");
  require_conformable(psi, aux[0], "shoc_step2");
  const Grid& g = psi.grid();
  const detail::StencilConstants c(g);
  const Complex* in = psi.data();
  Complex* o = out.data();
  if (variant == Scheme::Shoc1x) {
    const Complex* d = aux[0].data();
    detail::with_dim(g.dim(), [&]<int D>() {
      detail::for_each_interior(
          g, [&](std::size_t p) { o[p] = detail::shoc1x_step2_at<D>(in, d, p, c); });
    });
  } else {
    const Complex* d[3] = {aux[0].data(), aux.count() > 1 ? aux[1].data() : nullptr,
                           aux.count() > 2 ? aux[2].data() : nullptr};
    detail::with_dim(g.dim(), [&]<int D>() {
      detail::for_each_interior(
          g, [&](std::size_t p) { o[p] = detail::shoc_multi_step2_at<D>(d, p, c); });
    });
  }
}

void wide4_laplacian(const ComplexField& psi, ComplexField& out) {
  require_conformable(psi, out, "wide4_laplacian");
  const Grid& g = psi.grid();
  const detail::StencilConstants c(g);
  const Complex* in = psi.data();
  Complex* o = out.data();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  detail::for_each_interior(g, [&](std::size_t p) { o[p] = Complex(nan, nan); });
  detail::with_dim(g.dim(), [&]<int D>() {
    detail::for_each_at_depth(g, 2, [&](std::size_t p) { o[p] = detail::wide4_at<D>(in, p, c); });
  });
}

ComplexField wide4_laplacian(const ComplexField& psi) {
  ComplexField out(psi.grid());
  wide4_laplacian(psi, out);
  return out;
}

}  // namespace shoc
