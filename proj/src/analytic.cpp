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

#include "shoc/analytic.hpp"

#include <cmath>
#include <string>

#include "shoc/error.hpp"
#include "shoc/sweep.hpp"

namespace shoc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Factored form A u e^{i theta} of the soliton and its derivative pieces.
struct SolitonTerms {
  double amplitude;  // sqrt(omega / s)
  double kappa;
  double wavenumber;  // c / (2a)
  double frequency;   // omega - c^2 / (4a)
  double u;           // tanh(kappa (x - c t))
  double sech2;       // 1 - u^2
  Complex phase;
};

SolitonTerms soliton_terms(double x, double t, const DarkSoliton& p) {
  SolitonTerms s{};
  s.amplitude = std::sqrt(p.omega / p.s);
  s.kappa = std::sqrt(std::abs(p.omega) / (2.0 * p.a));
  s.wavenumber = p.c / (2.0 * p.a);
  s.frequency = p.omega - p.c * p.c / (4.0 * p.a);
  s.u = std::tanh(s.kappa * (x - p.c * t));
  s.sech2 = 1.0 - s.u * s.u;
  s.phase = std::polar(1.0, s.wavenumber * x + s.frequency * t);
  return s;
}

double radius2(const Point3& r, int dim) {
  double sum = 0.0;
  for (int a = 0; a < dim; ++a) sum += r[a] * r[a];
  return sum;
}

}  // namespace

void validate(const ExactSolution& solution) {
  std::visit(Overloaded{
                 [](const DarkSoliton& p) {
                   if (!(p.a > 0.0)) throw InvalidArgument("dark soliton: a must be > 0");
                   if (p.s == 0.0 || !(p.omega / p.s > 0.0)) {
                     throw InvalidArgument("dark soliton: omega / s must be > 0");
                   }
                 },
                 [](const GaussianPacket& p) {
                   if (p.dim != 2 && p.dim != 3) {
                     throw InvalidArgument("gaussian packet: dim must be 2 or 3");
                   }
                   if (!(p.a > 0.0)) throw InvalidArgument("gaussian packet: a must be > 0");
                 },
             },
             solution);
}

int dimension_of(const ExactSolution& solution) noexcept {
  if (const auto* g = std::get_if<GaussianPacket>(&solution)) return g->dim;
  return 1;
}

NlseParams params_for(const ExactSolution& solution) {
  return std::visit(Overloaded{
                        [](const DarkSoliton& p) { return NlseParams{p.a, p.s, Potential::none()}; },
                        [](const GaussianPacket& p) {
                          return NlseParams{p.a, 0.0, Potential::harmonic(1.0 / p.a)};
                        },
                    },
                    solution);
}

Complex dark_soliton(double x, double t, const DarkSoliton& p) {
  const SolitonTerms s = soliton_terms(x, t, p);
  return s.amplitude * s.u * s.phase;
}

Complex gaussian_packet(const Point3& r, double t, int dim, double a) {
  return std::exp(-radius2(r, dim) / (2.0 * a)) * std::polar(1.0, -double(dim) * t);
}

Complex exact_value(const ExactSolution& solution, const Point3& r, double t) {
  return std::visit(Overloaded{
                        [&](const DarkSoliton& p) { return dark_soliton(r[0], t, p); },
                        [&](const GaussianPacket& p) { return gaussian_packet(r, t, p.dim, p.a); },
                    },
                    solution);
}

Complex analytic_time_derivative(const ExactSolution& solution, const Point3& r, double t) {
  return std::visit(
      Overloaded{
          [&](const DarkSoliton& p) {
            const SolitonTerms s = soliton_terms(r[0], t, p);
            const Complex inner(-p.c * s.kappa * s.sech2, s.frequency * s.u);
            return s.amplitude * inner * s.phase;
          },
          [&](const GaussianPacket& p) {
            return Complex(0.0, -double(p.dim)) * gaussian_packet(r, t, p.dim, p.a);
          },
      },
      solution);
}

Complex analytic_laplacian(const ExactSolution& solution, const Point3& r, double t) {
  return std::visit(
      Overloaded{
          [&](const DarkSoliton& p) {
            const SolitonTerms s = soliton_terms(r[0], t, p);
            const double k = s.kappa;
            const double q = s.wavenumber;
            const Complex inner(-2.0 * k * k * s.u * s.sech2 - q * q * s.u, 2.0 * q * k * s.sech2);
            return s.amplitude * inner * s.phase;
          },
          [&](const GaussianPacket& p) {
            const double factor = radius2(r, p.dim) / (p.a * p.a) - double(p.dim) / p.a;
            return factor * gaussian_packet(r, t, p.dim, p.a);
          },
      },
      solution);
}

void sample(const ExactSolution& solution, double t, ComplexField& out) {
  const Grid& g = out.grid();
  if (g.dim() != dimension_of(solution)) {
    throw InvalidArgument("sample: grid dimension does not match the solution");
  }
  Complex* o = out.data();
  detail::for_each_point(g.size(),
                         [&](std::size_t p) { o[p] = exact_value(solution, g.position(p), t); });
}

std::vector<AxisExtent> auto_domain(const ExactSolution& solution, double t_end, double eps) {
  validate(solution);
  if (!(t_end > 0.0)) throw InvalidArgument("auto_domain: t_end must be > 0");
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("auto_domain: eps must be in (0, 1)");
  return std::visit(
      Overloaded{
          [&](const DarkSoliton& p) {
            const double half = std::sqrt(2.0 * p.a / std::abs(p.omega)) * std::acosh(1.0 / std::sqrt(eps));
            const double drift = p.c * t_end;
            return std::vector<AxisExtent>{{-half + std::min(0.0, drift), half + std::max(0.0, drift)}};
          },
          [&](const GaussianPacket& p) {
            const double half = std::sqrt(-p.a * std::log(eps));
            return std::vector<AxisExtent>(std::size_t(p.dim), AxisExtent{-half, half});
          },
      },
      solution);
}

std::vector<AxisExtent> snap_to_grid(std::span<const AxisExtent> extents, double h,
                                     SnapMode mode) {
  if (!(h > 0.0)) throw InvalidArgument("snap_to_grid: h must be > 0");
  constexpr double kTol = 1e-9;
  std::vector<AxisExtent> out;
  out.reserve(extents.size());
  for (const AxisExtent& e : extents) {
    const double lo = e.min / h;
    const double hi = e.max / h;
    if (mode == SnapMode::Outward) {
      out.push_back({std::floor(lo + kTol) * h, std::ceil(hi - kTol) * h});
    } else {
      out.push_back({std::round(lo) * h, std::round(hi) * h});
    }
  }
  return out;
}

}  // namespace shoc
