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


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "shoc/boundary.hpp"
#include "shoc/error.hpp"
#include "shoc/stencils.hpp"
#include "test_support.hpp"

namespace shoc {
namespace {

using testing::cube;
using testing::Fn;
using testing::max_abs;
using testing::max_diff;
using testing::sample_fn;

const Fn kConstant = [](const Point3&) { return Complex(2.5, -1.0); };
const Fn kXSquared = [](const Point3& r) { return Complex(r[0] * r[0], 0.0); };

std::vector<Scheme> fourth_order_variants(int dim) {
  if (dim == 1) return {Scheme::Shoc1x};
  return {Scheme::Shoc1x, Scheme::ShocMulti};
}

TEST(Stencils, SchemeNames) {
  EXPECT_EQ(parse_scheme("2SHOC"), Scheme::Shoc1x);
  EXPECT_EQ(parse_scheme("2shoc-1x"), Scheme::Shoc1x);
  EXPECT_EQ(parse_scheme("2shoc-multi"), Scheme::ShocMulti);
  EXPECT_EQ(parse_scheme("cd2"), Scheme::Cd2);
  EXPECT_EQ(parse_scheme("wide4"), Scheme::Wide4);
  EXPECT_FALSE(parse_scheme("cd4").has_value());
  for (Scheme s : {Scheme::Cd2, Scheme::Shoc1x, Scheme::ShocMulti, Scheme::Wide4}) {
    EXPECT_EQ(parse_scheme(to_string(s)), s);
  }
}

TEST(Stencils, AuxFieldCounts) {
  EXPECT_EQ(aux_field_count(Scheme::Cd2, 3), 0u);
  EXPECT_EQ(aux_field_count(Scheme::Shoc1x, 3), 1u);
  EXPECT_EQ(aux_field_count(Scheme::ShocMulti, 2), 2u);
  EXPECT_EQ(aux_field_count(Scheme::ShocMulti, 3), 3u);
  EXPECT_THROW(AuxFields(cube(1, 0.0, 1.0, 0.25), Scheme::ShocMulti), InvalidArgument);
  EXPECT_THROW(AuxFields(cube(2, 0.0, 1.0, 0.25), Scheme::Cd2), InvalidArgument);
}

TEST(Stencils, ConstantsAreAnnihilated) {
  for (int dim = 1; dim <= 3; ++dim) {
    const Grid g = cube(dim, 0.0, 1.0, 0.125);
    const ComplexField psi = sample_fn(g, kConstant);
    EXPECT_EQ(max_abs(cd2_laplacian(psi), 1), 0.0) << dim;
    EXPECT_EQ(max_abs(wide4_laplacian(psi), 2), 0.0) << dim;
    for (Scheme v : fourth_order_variants(dim)) {
      EXPECT_LE(max_abs(testing::shoc_laplacian_exact_bc(psi, v, kConstant), 1), 1e-13) << dim;
    }
  }
}

TEST(Stencils, Cd2ExactForQuadratics) {
  for (double h : {1.0, 0.1, 1.0 / 64.0}) {
    const Grid g = cube(1, -1.0, 3.0, h);
    const ComplexField lap = cd2_laplacian(sample_fn(g, kXSquared));
    for (std::size_t i = 1; i + 1 < g.size(); ++i) EXPECT_NEAR(lap[i].real(), 2.0, 1e-9) << h;
  }
  for (int dim = 2; dim <= 3; ++dim) {
    const Grid g = cube(dim, -1.0, 1.0, 0.25);
    const ComplexField lap = cd2_laplacian(sample_fn(g, kXSquared));
    const ComplexField two(g, Complex(2.0, 0.0));
    EXPECT_LE(max_diff(lap, two, 1), 1e-13);
  }
}

TEST(Stencils, Cd2MatchesHandSummation) {
  const Grid g = cube(2, 0.0, 1.0, 0.125);
  const ComplexField psi = testing::random_field(g, 11);
  const ComplexField lap = cd2_laplacian(psi);
  const std::size_t p = g.flat({3, 5, 0});
  const std::size_t sx = g.stride(0), sy = g.stride(1);
  const Complex ref =
      (psi[p + sx] + psi[p - sx] + psi[p + sy] + psi[p - sy] - 4.0 * psi[p]) / (0.125 * 0.125);
  EXPECT_LE(std::abs(lap[p] - ref), 1e-15 * std::abs(ref));
}

TEST(Stencils, Cd2LeavesBoundaryUntouched) {
  const Grid g = cube(2, 0.0, 1.0, 0.25);
  ComplexField out(g, Complex(7.0, 7.0));
  cd2_laplacian(testing::random_field(g, 3), out);
  EXPECT_EQ(out[0], Complex(7.0, 7.0));
  EXPECT_EQ(out[g.flat({4, 2, 0})], Complex(7.0, 7.0));
}

TEST(Stencils, Step1QuadraticValues) {
  const Grid g1 = cube(1, -2.0, 2.0, 1.0);
  AuxFields aux1(g1, Scheme::Shoc1x);
  shoc_step1(sample_fn(g1, kXSquared), aux1);
  for (std::size_t i = 1; i + 1 < g1.size(); ++i) EXPECT_EQ(aux1[0][i], Complex(2.0, 0.0));

  const Grid g2 = cube(2, -1.0, 1.0, 0.25);
  AuxFields aux2(g2, Scheme::ShocMulti);
  shoc_step1(sample_fn(g2, kXSquared), aux2);
  EXPECT_LE(max_diff(aux2[0], ComplexField(g2, Complex(2.0, 0.0)), 1), 1e-13);
  EXPECT_EQ(max_abs(aux2[1], 1), 0.0);
}

TEST(Stencils, QuarticAtOriginIsZero) {
  const Grid g = cube(1, -2.0, 2.0, 1.0);
  const Fn quartic = [](const Point3& r) { return Complex(std::pow(r[0], 4), 0.0); };
  const ComplexField psi = sample_fn(g, quartic);
  const std::size_t origin = 2;
  // 7/6 is not representable, so the compact form is zero up to one rounding.
  EXPECT_LE(std::abs(testing::shoc_laplacian_exact_bc(psi, Scheme::Shoc1x, quartic)[origin]), 1e-15);
  EXPECT_EQ(wide4_laplacian(psi)[origin], Complex(0.0));
}

// Every monomial of degree <= 3 per axis, and x^4 / y^4 / z^4.
TEST(Stencils, PolynomialExactness) {
  for (int dim = 1; dim <= 3; ++dim) {
    const Grid g = cube(dim, -1.0, 1.0, 0.25);
    std::vector<std::array<int, 3>> exps;
    const int top = 3;
    for (int i = 0; i <= top; ++i)
      for (int j = 0; j <= (dim >= 2 ? top : 0); ++j)
        for (int k = 0; k <= (dim >= 3 ? top : 0); ++k) exps.push_back({i, j, k});
    for (int a = 0; a < dim; ++a) {
      std::array<int, 3> e{0, 0, 0};
      e[a] = 4;
      exps.push_back(e);
    }
    for (const auto& e : exps) {
      const Fn f = [e](const Point3& r) {
        return Complex(std::pow(r[0], e[0]) * std::pow(r[1], e[1]) * std::pow(r[2], e[2]), 0.0);
      };
      const Fn lap_f = [e](const Point3& r) {
        double sum = 0.0;
        for (int a = 0; a < 3; ++a) {
          if (e[a] < 2) continue;
          double term = e[a] * (e[a] - 1) * std::pow(r[a], e[a] - 2);
          for (int b = 0; b < 3; ++b)
            if (b != a) term *= std::pow(r[b], e[b]);
          sum += term;
        }
        return Complex(sum, 0.0);
      };
      const ComplexField psi = sample_fn(g, f);
      const ComplexField exact = sample_fn(g, lap_f);
      for (Scheme v : fourth_order_variants(dim)) {
        EXPECT_LE(max_diff(testing::shoc_laplacian_exact_bc(psi, v, f), exact, 1), 1e-12)
            << "dim " << dim << " variant " << to_string(v) << " exps " << e[0] << e[1] << e[2];
      }
      EXPECT_LE(max_diff(wide4_laplacian(psi), exact, 2), 1e-12) << dim;
    }
  }
}

TEST(Stencils, EquivalenceWithWideStencil) {
  for (int dim = 1; dim <= 3; ++dim) {
    const Grid g = cube(dim, 0.0, 1.0, dim == 3 ? 1.0 / 12.0 : 1.0 / 24.0);
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexField psi = testing::random_field(g, 100 + std::uint64_t(trial));
      const ComplexField wide = wide4_laplacian(psi);
      const double scale = max_abs(wide, 2);
      for (Scheme v : fourth_order_variants(dim)) {
        AuxFields aux(g, v);
        shoc_step1(psi, aux);
        ComplexField out(g);
        shoc_step2(psi, aux, v, out);
        EXPECT_LE(max_diff(out, wide, 2), 1e-12 * scale) << dim << " " << to_string(v);
      }
    }
  }
}

// The single-storage step 2 equals the central difference of the central
// difference, corrected: D - h^2/12 * (second difference of D along each axis)
// plus, in 2D and 3D, the cross terms. In 1D this is a direct composition.
TEST(Stencils, OneDimensionalCompositionMatches) {
  const Grid g = cube(1, 0.0, 1.0, 1.0 / 40.0);
  const ComplexField psi = testing::random_field(g, 5);
  AuxFields aux(g, Scheme::Shoc1x);
  shoc_step1(psi, aux);
  ComplexField out(g);
  shoc_step2(psi, aux, Scheme::Shoc1x, out);
  const ComplexField d = cd2_laplacian(psi);
  const ComplexField dd = cd2_laplacian(d);
  const double h2 = g.h() * g.h();
  double scale = 0.0, dev = 0.0;
  for (std::size_t i = 2; i + 2 < g.size(); ++i) {
    const Complex ref = d[i] - h2 / 12.0 * dd[i];
    scale = std::max(scale, std::abs(ref));
    dev = std::max(dev, std::abs(out[i] - ref));
  }
  EXPECT_LE(dev, 1e-12 * scale);
}

TEST(Stencils, VariantsAgreeOnFullInterior) {
  for (int dim = 2; dim <= 3; ++dim) {
    const Grid g = cube(dim, 0.0, 1.0, dim == 3 ? 1.0 / 10.0 : 1.0 / 20.0);
    const ComplexField psi = testing::random_field(g, 21);
    const ComplexField totals = testing::random_field(g, 22);
    const BoundaryMap map(g);
    const auto total = [&](const BoundaryPoint& bp) { return totals[bp.flat]; };
    ComplexField one(g), multi(g);
    AuxFields aux1(g, Scheme::Shoc1x), auxm(g, Scheme::ShocMulti);
    shoc_step1(psi, aux1);
    shoc_step1(psi, auxm);
    assign_boundary_laplacian(aux1, psi, map, total);
    assign_boundary_laplacian(auxm, psi, map, total);
    shoc_step2(psi, aux1, Scheme::Shoc1x, one);
    shoc_step2(psi, auxm, Scheme::ShocMulti, multi);
    EXPECT_LE(max_diff(one, multi, 1), 1e-12 * max_abs(one, 1)) << dim;
  }
}

TEST(Stencils, Linearity) {
  const Complex alpha(0.7, -1.3), beta(-2.1, 0.4);
  for (int dim = 1; dim <= 3; ++dim) {
    const Grid g = cube(dim, 0.0, 1.0, dim == 3 ? 0.125 : 1.0 / 16.0);
    const ComplexField f = testing::random_field(g, 31);
    const ComplexField h = testing::random_field(g, 32);
    ComplexField mix(g);
    for (std::size_t p = 0; p < g.size(); ++p) mix[p] = alpha * f[p] + beta * h[p];
    std::vector<Scheme> schemes{Scheme::Cd2, Scheme::Wide4};
    for (Scheme v : fourth_order_variants(dim)) schemes.push_back(v);
    for (Scheme s : schemes) {
      const auto apply = [&](const ComplexField& psi) {
        ComplexField out(g);
        if (s == Scheme::Cd2) {
          cd2_laplacian(psi, out);
        } else if (s == Scheme::Wide4) {
          wide4_laplacian(psi, out);
        } else {
          AuxFields aux(g, s);
          shoc_step1(psi, aux);
          // Zero boundary fill is itself linear.
          for (std::size_t i = 0; i < aux.count(); ++i)
            for (std::size_t p = 0; p < g.size(); ++p)
              if (g.on_boundary(g.unravel(p))) aux[i][p] = Complex(0.0);
          shoc_step2(psi, aux, s, out);
        }
        return out;
      };
      const ComplexField lf = apply(f), lh = apply(h), lm = apply(mix);
      ComplexField combo(g);
      for (std::size_t p = 0; p < g.size(); ++p) combo[p] = alpha * lf[p] + beta * lh[p];
      const std::size_t depth = s == Scheme::Wide4 ? 2 : 1;
      EXPECT_LE(max_diff(lm, combo, depth), 1e-12 * max_abs(combo, depth))
          << dim << " " << to_string(s);
    }
  }
}

double fitted_slope(const std::vector<double>& hs, const std::vector<double>& errs) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    mx += std::log(hs[i]);
    my += std::log(errs[i]);
  }
  mx /= double(hs.size());
  my /= double(hs.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    sxy += (std::log(hs[i]) - mx) * (std::log(errs[i]) - my);
    sxx += (std::log(hs[i]) - mx) * (std::log(hs[i]) - mx);
  }
  return sxy / sxx;
}

TEST(Stencils, ConvergenceOnSines) {
  for (int dim = 1; dim <= 3; ++dim) {
    const Fn f = [dim](const Point3& r) {
      double v = 1.0;
      for (int a = 0; a < dim; ++a) v *= std::sin(2.0 * r[a] + 0.3);
      return Complex(v, 0.5 * v);
    };
    const Fn lap_f = [&f, dim](const Point3& r) { return -4.0 * double(dim) * f(r); };
    const std::vector<double> hs =
        dim == 3 ? std::vector<double>{1.0 / 8, 1.0 / 16} : std::vector<double>{1.0 / 8, 1.0 / 16, 1.0 / 32};
    std::vector<double> e_cd2, e_wide, e_1x, e_multi;
    for (double h : hs) {
      const Grid g = cube(dim, 0.0, 1.0, h);
      const ComplexField psi = sample_fn(g, f);
      const ComplexField exact = sample_fn(g, lap_f);
      e_cd2.push_back(max_diff(cd2_laplacian(psi), exact, 1));
      e_wide.push_back(max_diff(wide4_laplacian(psi), exact, 2));
      e_1x.push_back(max_diff(testing::shoc_laplacian_exact_bc(psi, Scheme::Shoc1x, f), exact, 1));
      if (dim >= 2) {
        e_multi.push_back(
            max_diff(testing::shoc_laplacian_exact_bc(psi, Scheme::ShocMulti, f), exact, 1));
      }
    }
    EXPECT_NEAR(fitted_slope(hs, e_cd2), 2.0, 0.1) << dim;
    EXPECT_NEAR(fitted_slope(hs, e_wide), 4.0, 0.1) << dim;
    EXPECT_NEAR(fitted_slope(hs, e_1x), 4.0, 0.1) << dim;
    if (dim >= 2) {
      EXPECT_NEAR(fitted_slope(hs, e_multi), 4.0, 0.1) << dim;
    }
  }
}

TEST(Stencils, WideStencilMarksDepthOne) {
  const Grid g = cube(2, 0.0, 1.0, 0.125);
  ComplexField out(g, Complex(3.0, 3.0));
  wide4_laplacian(testing::random_field(g, 1), out);
  EXPECT_TRUE(std::isnan(out[g.flat({1, 4, 0})].real()));
  EXPECT_TRUE(std::isnan(out[g.flat({4, 7, 0})].real()));
  EXPECT_FALSE(std::isnan(out[g.flat({2, 4, 0})].real()));
  EXPECT_EQ(out[g.flat({0, 4, 0})], Complex(3.0, 3.0));
}

TEST(Stencils, VariantMismatchIsRejected) {
  const Grid g = cube(2, 0.0, 1.0, 0.125);
  const ComplexField psi = testing::random_field(g, 1);
  AuxFields aux(g, Scheme::Shoc1x);
  shoc_step1(psi, aux);
  ComplexField out(g);
  EXPECT_THROW(shoc_step2(psi, aux, Scheme::ShocMulti, out), InvalidArgument);
  EXPECT_THROW(shoc_step2(psi, aux, Scheme::Cd2, out), InvalidArgument);
}

TEST(Stencils, NonConformableFieldsAreRejected) {
  const ComplexField psi = testing::random_field(cube(1, 0.0, 1.0, 0.125), 1);
  ComplexField out(cube(1, 0.0, 1.0, 0.25));
  EXPECT_THROW(cd2_laplacian(psi, out), InvalidArgument);
}

}  // namespace
}  // namespace shoc
