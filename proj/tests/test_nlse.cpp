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

#include "shoc/analytic.hpp"
#include "shoc/error.hpp"
#include "shoc/nlse.hpp"
#include "test_support.hpp"

namespace shoc {
namespace {

using testing::cube;
using testing::max_abs;
using testing::max_diff;

TEST(Potential, Values) {
  const NlseParams none{1.0, 0.0, Potential::none()};
  const Grid g2 = cube(2, -1.0, 1.0, 0.5);
  const RealField v0 = build_potential(g2, none);
  for (std::size_t p = 0; p < g2.size(); ++p) EXPECT_EQ(v0[p], 0.0);

  const NlseParams harmonic{1.0, 0.0, Potential::harmonic()};
  const RealField v2 = build_potential(g2, harmonic);
  EXPECT_EQ(v2[g2.flat({4, 4, 0})], 2.0);
  const Grid g3 = cube(3, -1.0, 1.0, 0.5);
  EXPECT_EQ(build_potential(g3, harmonic)[g3.flat({4, 4, 4})], 3.0);

  const NlseParams half{2.0, 0.0, Potential::harmonic()};
  EXPECT_EQ(build_potential(g2, half)[g2.flat({4, 4, 0})], 1.0);
}

TEST(Potential, TabulatedMustBeConformable) {
  const Grid g = cube(1, 0.0, 1.0, 0.25);
  auto table = std::make_shared<RealField>(cube(1, 0.0, 1.0, 0.125), 1.0);
  EXPECT_THROW(build_potential(g, NlseParams{1.0, 0.0, Potential::tabulated(table)}),
               InvalidArgument);
  auto ok = std::make_shared<RealField>(g, 1.5);
  EXPECT_EQ(build_potential(g, NlseParams{1.0, 0.0, Potential::tabulated(ok)})[2], 1.5);
}

TEST(Nlse, RejectsInvalidSetups) {
  const Grid g = cube(2, 0.0, 1.0, 0.25);
  const RealField v(g, 0.0);
  EXPECT_THROW(NlseOperator(NlseParams{0.0, 0.0, {}}, Scheme::Cd2, BoundaryKind::Dirichlet, v),
               InvalidArgument);
  EXPECT_THROW(NlseOperator(NlseParams{}, Scheme::Wide4, BoundaryKind::Dirichlet, v),
               InvalidArgument);
  EXPECT_THROW(NlseOperator(NlseParams{}, Scheme::ShocMulti, BoundaryKind::Msd, v),
               InvalidArgument);
}

TEST(Nlse, ZeroFieldGivesZero) {
  const Grid g = cube(2, 0.0, 1.0, 0.25);
  const RealField v(g, 1.0);
  for (Scheme s : {Scheme::Cd2, Scheme::Shoc1x, Scheme::ShocMulti}) {
    NlseOperator op(NlseParams{1.0, -1.0, {}}, s, BoundaryKind::Dirichlet, v);
    ComplexField out(g, Complex(5.0));
    op(ComplexField(g), out);
    EXPECT_EQ(max_abs(out, 0), 0.0);
  }
}

TEST(Nlse, ConstantFieldRotatesPhase) {
  const Grid g = cube(1, 0.0, 1.0, 0.125);
  const RealField v(g, 0.0);
  for (Scheme s : {Scheme::Cd2, Scheme::Shoc1x}) {
    for (BoundaryKind bc : {BoundaryKind::Dirichlet, BoundaryKind::Msd}) {
      NlseOperator op(NlseParams{1.0, -1.0, {}}, s, bc, v);
      ComplexField out(g);
      op(ComplexField(g, Complex(1.0)), out);
      // Dirichlet pins psi_t = 0 at the boundary, which a rotating constant
      // violates; step 2 then sees that fill at depth-1 points.
      const std::size_t first = (s == Scheme::Shoc1x && bc == BoundaryKind::Dirichlet) ? 2 : 1;
      for (std::size_t i = first; i + first < g.size(); ++i) {
        EXPECT_EQ(out[i], Complex(0.0, -1.0)) << to_string(s) << " " << to_string(bc) << " " << i;
      }
      const Complex edge = bc == BoundaryKind::Dirichlet ? Complex(0.0) : Complex(0.0, -1.0);
      EXPECT_EQ(out[0], edge);
      EXPECT_EQ(out[g.size() - 1], edge);
    }
  }
}

TEST(Nlse, GaugeCovariance) {
  const Complex phase = std::polar(1.0, 0.913);
  for (int dim = 1; dim <= 3; ++dim) {
    const Grid g = cube(dim, 0.0, 1.0, dim == 3 ? 0.125 : 1.0 / 16.0);
    RealField v(g);
    for (std::size_t p = 0; p < g.size(); ++p) v[p] = 0.1 * double(p % 7);
    const ComplexField psi = testing::random_field(g, 40 + std::uint64_t(dim));
    ComplexField rotated(g);
    for (std::size_t p = 0; p < g.size(); ++p) rotated[p] = phase * psi[p];
    for (Scheme s : {Scheme::Cd2, Scheme::Shoc1x, Scheme::ShocMulti}) {
      if (s == Scheme::ShocMulti && dim == 1) continue;
      for (BoundaryKind bc : {BoundaryKind::Dirichlet, BoundaryKind::Msd}) {
        if (s == Scheme::ShocMulti && bc == BoundaryKind::Msd) continue;
        NlseOperator op(NlseParams{0.8, -1.2, {}}, s, bc, v);
        ComplexField a(g), b(g);
        op(psi, a);
        op(rotated, b);
        for (std::size_t p = 0; p < g.size(); ++p) a[p] *= phase;
        EXPECT_LE(max_diff(a, b, 0), 1e-12 * max_abs(a, 0))
            << dim << " " << to_string(s) << " " << to_string(bc);
      }
    }
  }
}

TEST(Nlse, Cd2MatchesDirectFormula) {
  const Grid g = cube(2, 0.0, 1.0, 0.125);
  RealField v(g);
  for (std::size_t p = 0; p < g.size(); ++p) v[p] = 0.01 * double(p);
  const ComplexField psi = testing::random_field(g, 50);
  const NlseParams params{1.5, 0.7, {}};
  NlseOperator op(params, Scheme::Cd2, BoundaryKind::Dirichlet, v);
  ComplexField out(g);
  op(psi, out);
  const ComplexField lap = cd2_laplacian(psi);
  ComplexField ref(g);
  for (std::size_t p = 0; p < g.size(); ++p) {
    ref[p] = Complex(0.0, 1.0) * (params.a * lap[p] + (params.s * std::norm(psi[p]) - v[p]) * psi[p]);
  }
  EXPECT_LE(max_diff(out, ref, 1), 1e-13 * max_abs(ref, 1));
}

double order_of(const std::vector<double>& hs, const std::vector<double>& es) {
  return std::log(es.front() / es.back()) / std::log(hs.front() / hs.back());
}

// F evaluated on an exact solution approaches its analytic time derivative.
TEST(Nlse, ResidualOnExactSolutions) {
  struct Case {
    ExactSolution sol;
    BoundaryKind bc;
    std::vector<double> hs;
  };
  const std::vector<Case> cases = {
      {DarkSoliton{-1.0, 0.5, 1.0, -1.0}, BoundaryKind::Msd, {0.25, 0.125, 0.0625}},
      {GaussianPacket{2, 1.0}, BoundaryKind::Dirichlet, {0.5, 0.25, 0.125}},
      {GaussianPacket{3, 1.0}, BoundaryKind::Dirichlet, {0.5, 0.25}},
  };
  for (const Case& c : cases) {
    const int dim = dimension_of(c.sol);
    const NlseParams params = params_for(c.sol);
    const auto ext = snap_to_grid(auto_domain(c.sol, 1.0), 0.5, SnapMode::Nearest);
    std::vector<double> e_cd2, e_shoc;
    for (double h : c.hs) {
      std::vector<double> lo, hi;
      for (const AxisExtent& e : ext) {
        lo.push_back(e.min);
        hi.push_back(e.max);
      }
      const Grid g = Grid::make(dim, lo, hi, h);
      const RealField v = build_potential(g, params);
      ComplexField psi(g), exact_t(g);
      sample(c.sol, 0.3, psi);
      for (std::size_t p = 0; p < g.size(); ++p) {
        exact_t[p] = analytic_time_derivative(c.sol, g.position(p), 0.3);
      }
      for (Scheme s : {Scheme::Cd2, Scheme::Shoc1x}) {
        NlseOperator op(params, s, c.bc, v);
        ComplexField out(g);
        op(psi, out);
        (s == Scheme::Cd2 ? e_cd2 : e_shoc).push_back(max_diff(out, exact_t, 1));
      }
    }
    EXPECT_NEAR(order_of(c.hs, e_cd2), 2.0, 0.15) << dim;
    EXPECT_GT(order_of(c.hs, e_shoc), 3.8) << dim;
  }
}

TEST(Nlse, CountsEvaluations) {
  const Grid g = cube(1, 0.0, 1.0, 0.25);
  const RealField v(g, 0.0);
  NlseOperator op(NlseParams{}, Scheme::Shoc1x, BoundaryKind::Dirichlet, v);
  ComplexField out(g);
  op(ComplexField(g), out);
  op(ComplexField(g), out);
  EXPECT_EQ(op.evaluations(), 2u);
  EXPECT_EQ(op.aux_count(), 1u);
}

}  // namespace
}  // namespace shoc
