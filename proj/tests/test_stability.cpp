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

#include <algorithm>
#include <cmath>

#include "shoc/error.hpp"
#include "shoc/nlse.hpp"
#include "shoc/stability.hpp"
#include "test_support.hpp"

namespace shoc {
namespace {

using testing::cube;

TEST(Stability, TablesAreVerbatim) {
  const auto g1 = stability_g_twelfths(1);
  const std::vector<int> t1(g1.begin(), g1.end());
  EXPECT_EQ(t1, (std::vector<int>{64, 63, 46, 12, -3, -4}));
  const auto g2 = stability_g_twelfths(2);
  EXPECT_EQ(std::vector<int>(g2.begin(), g2.end()),
            (std::vector<int>{128, 127, 126, 110, 109, 92, 24, 9, 8, -6, -7, -8}));
  const auto g3 = stability_g_twelfths(3);
  EXPECT_EQ(std::vector<int>(g3.begin(), g3.end()),
            (std::vector<int>{192, 191, 190, 189, 174, 173, 172, 156, 155, 138, 36, 21, 20, 6, 5,
                              4, -9, -10, -11, -12}));
  EXPECT_THROW(stability_g_twelfths(4), InvalidArgument);
}

TEST(Stability, LinearDirichletReduction) {
  for (int dim = 1; dim <= 3; ++dim) {
    for (double h : {0.1, 0.25, 1.0 / 32.0}) {
      for (double a : {1.0, 0.5}) {
        const Grid g = cube(dim, 0.0, 1.0, h);
        const StabilityBound b = stability_bound(testing::random_field(g, 1), RealField(g, 0.0),
                                                 NlseParams{a, 0.0, {}}, BoundaryKind::Dirichlet);
        const double ref = linear_dirichlet_bound(h, dim, a);
        EXPECT_LE(std::abs(b.k_max - ref), 1e-12 * ref) << dim << " " << h << " " << a;
        EXPECT_EQ(b.boundary_norm, 0.0);
        EXPECT_EQ(b.dominant, DominantTerm::Interior);
      }
    }
  }
}

TEST(Stability, WorkedExamples) {
  const Grid g1 = cube(1, 0.0, 1.0, 0.1);
  const StabilityBound b1 =
      stability_bound(ComplexField(g1, Complex(1.0)), RealField(g1, 0.0), NlseParams{1.0, 0.0, {}},
                      BoundaryKind::Dirichlet);
  EXPECT_NEAR(b1.k_max, 0.0053033, 5e-8);
  EXPECT_NEAR(b1.k_max, 0.75 * 0.01 / std::sqrt(2.0), 1e-15);

  const Grid g3 = cube(3, 0.0, 1.0, 0.25);
  const StabilityBound b3 =
      stability_bound(ComplexField(g3, Complex(1.0)), RealField(g3, 0.0), NlseParams{1.0, 0.0, {}},
                      BoundaryKind::Dirichlet);
  EXPECT_NEAR(b3.interior_norm, 16.0, 1e-14);
  EXPECT_NEAR(b3.k_max / (0.25 * 0.25), 0.17678, 5e-6);
}

TEST(Stability, InteriorNormMatchesBruteForce) {
  for (int dim = 1; dim <= 3; ++dim) {
    const Grid g = cube(dim, 0.0, 1.0, 0.125);
    const ComplexField psi = testing::random_field(g, 60 + std::uint64_t(dim));
    RealField v(g);
    for (std::size_t p = 0; p < g.size(); ++p) v[p] = 30.0 * std::sin(double(p));
    for (double s : {-40.0, 0.0, 25.0}) {
      const NlseParams params{0.7, s, {}};
      const StabilityBound b = stability_bound(psi, v, params, BoundaryKind::Dirichlet);
      double m = 0.0;
      for (std::size_t p = 0; p < g.size(); ++p) {
        const double l = g.h() * g.h() / params.a * (s * std::norm(psi[p]) - v[p]);
        for (int t : stability_g_twelfths(dim)) m = std::max(m, std::abs(l - t / 12.0));
      }
      EXPECT_NEAR(b.interior_norm, m, 1e-13 * m) << dim << " " << s;
      EXPECT_NEAR(b.k_max, std::sqrt(8.0) / m * g.h() * g.h() / params.a, 1e-13 * b.k_max);
    }
  }
}

TEST(Stability, MsdBoundaryTermMatchesBruteForce) {
  const Grid g = cube(2, 0.0, 1.0, 0.125);
  const ComplexField psi = testing::random_field(g, 70);
  const RealField v(g, 0.0);
  const NlseParams params{1.0, -1.0, {}};
  const StabilityBound b = stability_bound(psi, v, params, BoundaryKind::Msd);
  NlseOperator cd2(params, Scheme::Cd2, BoundaryKind::Dirichlet, v);
  ComplexField ut(g);
  cd2(psi, ut);
  double m = 0.0;
  for (const BoundaryPoint& bp : cd2.boundary_map().points()) {
    m = std::max(m, g.h() * g.h() * std::abs(ut[bp.inner] / psi[bp.inner]));
  }
  EXPECT_NEAR(b.boundary_norm, m, 1e-13 * m);
  EXPECT_EQ(b.dominant, b.boundary_norm > b.interior_norm ? DominantTerm::Boundary
                                                          : DominantTerm::Interior);
}

TEST(Stability, MsdGuardedPointsAreCounted) {
  const Grid g = cube(1, 0.0, 1.0, 0.25);
  ComplexField psi(g, Complex(1.0));
  psi[3] = Complex(0.0);
  const StabilityBound b =
      stability_bound(psi, RealField(g, 0.0), NlseParams{1.0, -1.0, {}}, BoundaryKind::Msd);
  EXPECT_EQ(b.guarded_points, 1u);
  EXPECT_TRUE(std::isfinite(b.k_max));
}

TEST(Stability, SafetyFactors) {
  EXPECT_DOUBLE_EQ(choose_timestep(0.01, 2), 0.008);
  EXPECT_DOUBLE_EQ(choose_timestep(0.01, 3), 0.008);
  EXPECT_DOUBLE_EQ(choose_timestep(0.01, 1), 0.009);
  EXPECT_DOUBLE_EQ(choose_timestep(0.01, 1, 0.5), 0.005);
  EXPECT_THROW(choose_timestep(0.01, 1, 0.0), InvalidArgument);
}

}  // namespace
}  // namespace shoc
