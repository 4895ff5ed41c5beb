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

// Closed-form NLSE solutions used as initial conditions and error references.

#pragma once

#include <span>
#include <variant>
#include <vector>

#include "shoc/grid.hpp"
#include "shoc/nlse_params.hpp"

namespace shoc {

/// IEEE double unit roundoff.
inline constexpr double kMachineEpsilon = 2.220446049250313e-16;

/// Co-moving dark (grey) soliton of the 1D defocusing NLSE:
///
///   psi = sqrt(omega/s) tanh(kappa (x - c t)) exp(i [c x / (2a) + (omega - c^2 / (4a)) t])
///
/// with kappa = sqrt(|omega| / (2a)). Needs omega / s > 0 and a > 0.
struct DarkSoliton {
  double omega = -1.0;
  double c = 0.5;
  double a = 1.0;
  double s = -1.0;
};

/// Stationary Gaussian of the linear equation with V = |r|^2 / a:
///   psi = exp(-|r|^2 / (2a)) exp(-i dim t),  dim in {2, 3}.
struct GaussianPacket {
  int dim = 2;
  double a = 1.0;
};

using ExactSolution = std::variant<DarkSoliton, GaussianPacket>;

/// Throws InvalidArgument on violated parameter invariants.
void validate(const ExactSolution& solution);

int dimension_of(const ExactSolution& solution) noexcept;

/// NLSE coefficients the solution satisfies.
NlseParams params_for(const ExactSolution& solution);

Complex dark_soliton(double x, double t, const DarkSoliton& p);
Complex gaussian_packet(const Point3& r, double t, int dim, double a);

Complex exact_value(const ExactSolution& solution, const Point3& r, double t);
Complex analytic_time_derivative(const ExactSolution& solution, const Point3& r, double t);
Complex analytic_laplacian(const ExactSolution& solution, const Point3& r, double t);

/// Fills `out` with the solution sampled at time t.
void sample(const ExactSolution& solution, double t, ComplexField& out);

struct AxisExtent {
  double min;
  double max;
};

/// Smallest domain on which the solution sits at its far-field state up to
/// `eps` over [0, t_end]:
///   dark soliton: 1 - |psi|^2 / background = eps at the edges, widened by the
///                 drift c t_end on the side it travels to;
///   Gaussian:     |psi| = sqrt(eps) at the edges, half-width sqrt(-a ln eps).
std::vector<AxisExtent> auto_domain(const ExactSolution& solution, double t_end,
                                    double eps = kMachineEpsilon);

enum class SnapMode {
  Outward,  ///< floor(min / h), ceil(max / h)
  Nearest,  ///< round both ends to the nearest multiple of h
};

/// Moves both ends of every axis onto integer multiples of h.
std::vector<AxisExtent> snap_to_grid(std::span<const AxisExtent> extents, double h,
                                     SnapMode mode);

}  // namespace shoc
