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

// Laplacian approximations on a uniform grid.
//
// The two-step compact (2SHOC) schemes first form second-order differences D
// (step 1) and then combine D with its nearest neighbours to reach fourth
// order (step 2). Every stencil touches only adjacent points, so step 2 reads
// D on the boundary layer; the caller fills those values between the steps
// (see boundary.hpp). The wide five-point stencil reaches two points out and
// exists only as an equivalence oracle.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shoc/grid.hpp"

namespace shoc {

enum class Scheme {
  Cd2,        ///< second-order central difference
  Shoc1x,     ///< 2SHOC, single auxiliary field D
  ShocMulti,  ///< 2SHOC, one auxiliary field per axis (dim >= 2)
  Wide4,      ///< non-compact fourth-order stencil (oracle only)
};

std::string_view to_string(Scheme s) noexcept;
/// Accepts cd2, 2shoc, 2shoc-1x, 2shoc-multi, wide4 (case-insensitive).
std::optional<Scheme> parse_scheme(std::string_view text) noexcept;

inline bool is_two_step(Scheme s) noexcept {
  return s == Scheme::Shoc1x || s == Scheme::ShocMulti;
}

/// Step-1 output of a 2SHOC scheme: D for SHOC-1X, or D^x, D^y(, D^z) for
/// SHOC-MULTI. Allocated once by the caller and reused.
class AuxFields {
 public:
  AuxFields(const Grid& grid, Scheme variant);

  Scheme variant() const noexcept { return variant_; }
  const Grid& grid() const noexcept { return fields_.front().grid(); }
  std::size_t count() const noexcept { return fields_.size(); }
  ComplexField& operator[](std::size_t i) noexcept { return fields_[i]; }
  const ComplexField& operator[](std::size_t i) const noexcept { return fields_[i]; }

 private:
  Scheme variant_;
  std::vector<ComplexField> fields_;
};

/// Number of auxiliary fields a scheme needs on a grid of the given dimension.
std::size_t aux_field_count(Scheme scheme, int dim) noexcept;

/// Interior: sum over axes of (psi[+1] - 2 psi + psi[-1]) / h^2. Boundary
/// entries of `out` are left untouched.
void cd2_laplacian(const ComplexField& psi, ComplexField& out);
ComplexField cd2_laplacian(const ComplexField& psi);

/// Writes the interior of the step-1 field(s). The aux boundary must be filled
/// before shoc_step2 reads it.
void shoc_step1(const ComplexField& psi, AuxFields& aux);

/// Fourth-order Laplacian on the interior of `out`. Throws InvalidArgument if
/// `variant` does not match the scheme `aux` was produced for.
void shoc_step2(const ComplexField& psi, const AuxFields& aux, Scheme variant, ComplexField& out);

/// Wide fourth-order stencil at points at least two layers from the
/// boundary. Depth-1 points receive a quiet NaN marker; boundary entries are
/// untouched.
void wide4_laplacian(const ComplexField& psi, ComplexField& out);
ComplexField wide4_laplacian(const ComplexField& psi);

namespace detail {

/// Reciprocals and strides hoisted out of every sweep.
struct StencilConstants {
  explicit StencilConstants(const Grid& g)
      : inv_h2(1.0 / (g.h() * g.h())),
        inv_6h2(1.0 / (6.0 * g.h() * g.h())),
        inv_12h2(1.0 / (12.0 * g.h() * g.h())),
        s{g.stride(0), g.stride(1), g.stride(2)} {}
  double inv_h2;
  double inv_6h2;
  double inv_12h2;
  std::size_t s[3];
};

inline constexpr double kSevenSixths = 7.0 / 6.0;
inline constexpr double kTwelfth = 1.0 / 12.0;

template <int Dim>
inline Complex cd2_at(const Complex* psi, std::size_t p, const StencilConstants& c) {
  Complex sum = psi[p + c.s[0]] + psi[p - c.s[0]];
  if constexpr (Dim >= 2) sum += psi[p + c.s[1]] + psi[p - c.s[1]];
  if constexpr (Dim >= 3) sum += psi[p + c.s[2]] + psi[p - c.s[2]];
  return (sum - (2.0 * Dim) * psi[p]) * c.inv_h2;
}

inline Complex cd2_axis_at(const Complex* psi, std::size_t p, std::size_t stride,
                           const StencilConstants& c) {
  return (psi[p + stride] - 2.0 * psi[p] + psi[p - stride]) * c.inv_h2;
}

// Single-storage step 2. In 1D this is 7/6 D - (D[+1] + D[-1]) / 12; in 2D and
// 3D the cross stencil on D (center -12 resp. -10) is corrected by a
// corner/edge-midpoint stencil on psi scaled by 1/(6h^2).
template <int Dim>
inline Complex shoc1x_step2_at(const Complex* psi, const Complex* d, std::size_t p,
                               const StencilConstants& c) {
  const std::size_t sx = c.s[0];
  if constexpr (Dim == 1) {
    return kSevenSixths * d[p] - kTwelfth * (d[p + sx] + d[p - sx]);
  } else if constexpr (Dim == 2) {
    const std::size_t sy = c.s[1];
    const Complex cross = d[p + sx] + d[p - sx] + d[p + sy] + d[p - sy] - 12.0 * d[p];
    const Complex corners = psi[p + sx + sy] + psi[p + sx - sy] + psi[p - sx + sy] +
                            psi[p - sx - sy] - 4.0 * psi[p];
    return -kTwelfth * cross + c.inv_6h2 * corners;
  } else {
    const std::size_t sy = c.s[1];
    const std::size_t sz = c.s[2];
    const Complex cross =
        d[p + sx] + d[p - sx] + d[p + sy] + d[p - sy] + d[p + sz] + d[p - sz] - 10.0 * d[p];
    const Complex edges = psi[p + sx + sy] + psi[p + sx - sy] + psi[p - sx + sy] +
                          psi[p - sx - sy] + psi[p + sx + sz] + psi[p + sx - sz] +
                          psi[p - sx + sz] + psi[p - sx - sz] + psi[p + sy + sz] +
                          psi[p + sy - sz] + psi[p - sy + sz] + psi[p - sy - sz] -
                          12.0 * psi[p];
    return -kTwelfth * cross + c.inv_6h2 * edges;
  }
}

// Multi-storage step 2: 7/6 sum_a D^a - 1/12 sum_a (D^a[+a] + D^a[-a]).
template <int Dim>
inline Complex shoc_multi_step2_at(const Complex* const* d, std::size_t p,
                                   const StencilConstants& c) {
  Complex center = d[0][p];
  Complex nbrs = d[0][p + c.s[0]] + d[0][p - c.s[0]];
  if constexpr (Dim >= 2) {
    center += d[1][p];
    nbrs += d[1][p + c.s[1]] + d[1][p - c.s[1]];
  }
  if constexpr (Dim >= 3) {
    center += d[2][p];
    nbrs += d[2][p + c.s[2]] + d[2][p - c.s[2]];
  }
  return kSevenSixths * center - kTwelfth * nbrs;
}

template <int Dim>
inline Complex wide4_at(const Complex* psi, std::size_t p, const StencilConstants& c) {
  Complex sum{0.0, 0.0};
  for (int a = 0; a < Dim; ++a) {
    const std::size_t s = c.s[a];
    sum += -psi[p + 2 * s] + 16.0 * psi[p + s] - 30.0 * psi[p] + 16.0 * psi[p - s] -
           psi[p - 2 * s];
  }
  return sum * c.inv_12h2;
}

}  // namespace detail

}  // namespace shoc
