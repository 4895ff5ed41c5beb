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

#include "shoc/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include "shoc/error.hpp"

namespace shoc {

namespace {

std::atomic<long> g_live_fields{0};
std::atomic<long> g_total_fields{0};

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw InvalidArgument("grid dimension must be 1, 2 or 3 (got " + std::to_string(dim) + ")");
  }
}

}  // namespace

Grid Grid::make(int dim, std::span<const double> mins, std::span<const double> maxs, double h) {
  check_dim(dim);
  if (mins.size() < std::size_t(dim) || maxs.size() < std::size_t(dim)) {
    throw InvalidArgument("grid extents need one min/max per axis");
  }
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("grid spacing h must be > 0");
  std::array<std::size_t, 3> counts{1, 1, 1};
  for (int a = 0; a < dim; ++a) {
    if (!(maxs[a] > mins[a])) {
      throw InvalidArgument("grid axis " + std::to_string(a) + ": max must exceed min");
    }
    // Tolerate representation error so that (2 - 0) / 0.5 stays 4 cells.
    const double cells = (maxs[a] - mins[a]) / h;
    counts[a] = std::size_t(std::ceil(cells - 1e-9 * std::max(1.0, cells))) + 1;
  }
  return Grid(dim, mins, h, std::span<const std::size_t>(counts.data(), std::size_t(dim)));
}

Grid::Grid(int dim, std::span<const double> mins, double h, std::span<const std::size_t> counts)
    : dim_(dim), h_(h) {
  check_dim(dim);
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("grid spacing h must be > 0");
  if (mins.size() < std::size_t(dim) || counts.size() < std::size_t(dim)) {
    throw InvalidArgument("grid needs one min and one count per axis");
  }
  for (int a = 0; a < dim; ++a) {
    if (!std::isfinite(mins[a])) throw InvalidArgument("grid min must be finite");
    if (counts[a] < kMinPointsPerAxis) {
      throw InvalidArgument("grid axis " + std::to_string(a) + " has " +
                            std::to_string(counts[a]) + " points; at least " +
                            std::to_string(kMinPointsPerAxis) + " are required");
    }
    mins_[a] = mins[a];
    counts_[a] = counts[a];
  }
  std::size_t stride = 1;
  for (int a = dim - 1; a >= 0; --a) {
    strides_[a] = stride;
    stride *= counts_[a];
  }
  size_ = stride;
}

Index3 Grid::unravel(std::size_t flat) const noexcept {
  Index3 idx{0, 0, 0};
  for (int a = 0; a < dim_; ++a) {
    idx[a] = flat / strides_[a];
    flat -= idx[a] * strides_[a];
  }
  return idx;
}

Point3 Grid::position(std::size_t flat) const noexcept {
  const Index3 idx = unravel(flat);
  Point3 r{0.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) r[a] = coord(a, idx[a]);
  return r;
}

bool Grid::on_boundary(const Index3& idx) const noexcept { return depth(idx) == 0; }

std::size_t Grid::depth(const Index3& idx) const noexcept {
  std::size_t d = counts_[0];
  for (int a = 0; a < dim_; ++a) {
    d = std::min({d, idx[a], counts_[a] - 1 - idx[a]});
  }
  return d;
}

FieldAllocationStats field_allocation_stats() noexcept {
  return {g_live_fields.load(), g_total_fields.load()};
}

namespace detail {

FieldToken::FieldToken() noexcept : active_(true) {
  ++g_live_fields;
  ++g_total_fields;
}

FieldToken::FieldToken(const FieldToken& other) noexcept : active_(other.active_) {
  if (active_) {
    ++g_live_fields;
    ++g_total_fields;
  }
}

FieldToken& FieldToken::operator=(const FieldToken& other) noexcept {
  if (!active_ && other.active_) {
    active_ = true;
    ++g_live_fields;
    ++g_total_fields;
  }
  return *this;
}

FieldToken& FieldToken::operator=(FieldToken&& other) noexcept {
  if (this != &other) {
    if (active_) --g_live_fields;
    active_ = other.active_;
    other.active_ = false;
  }
  return *this;
}

FieldToken::~FieldToken() {
  if (active_) --g_live_fields;
}

}  // namespace detail

bool all_finite(const ComplexField& field) noexcept {
  return std::all_of(field.values().begin(), field.values().end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool all_finite(const RealField& field) noexcept {
  return std::all_of(field.values().begin(), field.values().end(),
                     [](double v) { return std::isfinite(v); });
}

double norm_sup(const ComplexField& field) noexcept {
  double m = 0.0;
  for (const Complex& z : field.values()) m = std::max(m, std::abs(z));
  return m;
}

double l2_raw(const ComplexField& field) noexcept {
  double sum = 0.0;
  for (const Complex& z : field.values()) sum += z.real() * z.real() + z.imag() * z.imag();
  return std::sqrt(sum);
}

}  // namespace shoc
