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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace shoc {

using Complex = std::complex<double>;
using Index3 = std::array<std::size_t, 3>;
using Point3 = std::array<double, 3>;

inline constexpr int kMaxDim = 3;
/// Every axis needs two interior layers for the wide fourth-order stencil.
inline constexpr std::size_t kMinPointsPerAxis = 5;

/// Uniform grid with a single spacing `h` on every axis. Points are stored
/// flat in row-major order: the last axis is contiguous. Axes beyond `dim()`
/// have count 1 and stride 0.
class Grid {
 public:
  /// Covers [mins, maxs] on every axis: count = ceil((max - min) / h) + 1, so
  /// the last point may overshoot the requested max by less than h.
  static Grid make(int dim, std::span<const double> mins, std::span<const double> maxs,
                   double h);

  Grid(int dim, std::span<const double> mins, double h, std::span<const std::size_t> counts);

  int dim() const noexcept { return dim_; }
  double h() const noexcept { return h_; }
  double min(int axis) const noexcept { return mins_[axis]; }
  double max(int axis) const noexcept { return mins_[axis] + h_ * double(counts_[axis] - 1); }
  std::size_t count(int axis) const noexcept { return counts_[axis]; }
  std::size_t stride(int axis) const noexcept { return strides_[axis]; }
  /// Total number of points N.
  std::size_t size() const noexcept { return size_; }

  double coord(int axis, std::size_t i) const noexcept { return mins_[axis] + h_ * double(i); }

  std::size_t flat(const Index3& idx) const noexcept {
    return idx[0] * strides_[0] + idx[1] * strides_[1] + idx[2] * strides_[2];
  }
  Index3 unravel(std::size_t flat) const noexcept;
  Point3 position(std::size_t flat) const noexcept;

  bool on_boundary(const Index3& idx) const noexcept;
  /// Distance (in points) to the nearest boundary layer; boundary points are 0.
  std::size_t depth(const Index3& idx) const noexcept;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int dim_ = 1;
  double h_ = 1.0;
  std::array<double, 3> mins_{};
  Index3 counts_{1, 1, 1};
  Index3 strides_{0, 0, 0};
  std::size_t size_ = 1;
};

/// Live and cumulative counts of N-sized field buffers. Used by the storage
/// audit to check that time stepping allocates nothing after setup.
struct FieldAllocationStats {
  long live = 0;
  long total = 0;
};
FieldAllocationStats field_allocation_stats() noexcept;

namespace detail {
class FieldToken {
 public:
  FieldToken() noexcept;
  FieldToken(const FieldToken&) noexcept;
  FieldToken(FieldToken&& other) noexcept : active_(other.active_) { other.active_ = false; }
  FieldToken& operator=(const FieldToken& other) noexcept;
  FieldToken& operator=(FieldToken&& other) noexcept;
  ~FieldToken();

 private:
  bool active_ = false;
};
}  // namespace detail

/// N values sampled on a grid. Complex samples are std::complex<double>, which
/// is layout-compatible with interleaved (re, im) pairs.
template <class T>
class BasicField {
 public:
  using value_type = T;

  explicit BasicField(const Grid& grid, T fill = T{}) : grid_(grid), data_(grid.size(), fill) {}

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return data_.size(); }

  T* data() noexcept { return data_.data(); }
  const T* data() const noexcept { return data_.data(); }
  std::span<T> values() noexcept { return data_; }
  std::span<const T> values() const noexcept { return data_; }

  T& operator[](std::size_t i) noexcept { return data_[i]; }
  const T& operator[](std::size_t i) const noexcept { return data_[i]; }

  bool conformable(const BasicField<T>& other) const noexcept { return grid_ == other.grid_; }
  template <class U>
  bool conformable(const BasicField<U>& other) const noexcept {
    return grid_ == other.grid();
  }

 private:
  Grid grid_;
  std::vector<T> data_;
  detail::FieldToken token_;
};

using ComplexField = BasicField<Complex>;
using RealField = BasicField<double>;

/// Throws InvalidArgument unless both fields live on the same grid.
template <class A, class B>
void require_conformable(const BasicField<A>& a, const BasicField<B>& b, const char* what);

bool all_finite(const ComplexField& field) noexcept;
bool all_finite(const RealField& field) noexcept;

/// max_i |field_i|
double norm_sup(const ComplexField& field) noexcept;
/// Plain Euclidean norm of the value vector (no grid weighting).
double l2_raw(const ComplexField& field) noexcept;

}  // namespace shoc

#include "shoc/error.hpp"

template <class A, class B>
void shoc::require_conformable(const BasicField<A>& a, const BasicField<B>& b, const char* what) {
  if (!a.conformable(b)) throw InvalidArgument(std::string(what) + ": fields are not conformable");
}
