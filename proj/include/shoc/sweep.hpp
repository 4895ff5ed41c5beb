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

// Loop helpers shared by the stencil, boundary and integrator sweeps.

#pragma once

#include <cstddef>
#include <utility>

#include "shoc/grid.hpp"

namespace shoc::detail {

/// Calls fn(flat) for every point at least `depth` layers away from the
/// boundary. The outer loops are split across OpenMP threads; the innermost
/// loop runs along the contiguous last axis. Every point is written by exactly
/// one iteration, so results do not depend on the thread count.
template <class Fn>
void for_each_at_depth(const Grid& g, std::size_t depth, Fn&& fn) {
  // Pad to three loops with the real axes at the back.
  std::size_t lo[3], hi[3], st[3];
  const int pad = 3 - g.dim();
  for (int p = 0; p < 3; ++p) {
    const int axis = p - pad;
    if (axis < 0) {
      lo[p] = 0;
      hi[p] = 1;
      st[p] = 0;
    } else {
      lo[p] = depth;
      hi[p] = g.count(axis) > depth ? g.count(axis) - depth : depth;
      st[p] = g.stride(axis);
    }
  }
  const long lo0 = long(lo[0]), hi0 = long(hi[0]);
  const long lo1 = long(lo[1]), hi1 = long(hi[1]);
#pragma omp parallel for collapse(2) schedule(static)
  for (long a = lo0; a < hi0; ++a) {
    for (long b = lo1; b < hi1; ++b) {
      const std::size_t base = std::size_t(a) * st[0] + std::size_t(b) * st[1];
      for (std::size_t c = lo[2]; c < hi[2]; ++c) fn(base + c * st[2]);
    }
  }
}

template <class Fn>
void for_each_interior(const Grid& g, Fn&& fn) {
  for_each_at_depth(g, 1, std::forward<Fn>(fn));
}

/// Flat loop over all N points, parallel over contiguous chunks.
template <class Fn>
void for_each_point(std::size_t n, Fn&& fn) {
  const long count = long(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) fn(std::size_t(i));
}

/// Dispatches a generic lambda on the grid dimension as a compile-time value.
template <class Fn>
decltype(auto) with_dim(int dim, Fn&& fn) {
  switch (dim) {
    case 1:
      return fn.template operator()<1>();
    case 2:
      return fn.template operator()<2>();
    default:
      return fn.template operator()<3>();
  }
}

}  // namespace shoc::detail
