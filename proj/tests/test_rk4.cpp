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
#include <limits>

#include "shoc/nlse.hpp"
#include "shoc/rk4.hpp"
#include "test_support.hpp"

namespace shoc {
namespace {

using testing::cube;

TEST(Rk4, ZeroRightHandSideKeepsState) {
  const Grid g = cube(2, 0.0, 1.0, 0.25);
  ComplexField psi = testing::random_field(g, 1);
  const ComplexField before(psi);
  Rk4Stepper stepper(g);
  for (int n = 0; n < 3; ++n) {
    stepper.step(psi, 0.1, [](const ComplexField&, ComplexField& out) {
      for (std::size_t p = 0; p < out.size(); ++p) out[p] = Complex(0.0);
    });
  }
  for (std::size_t p = 0; p < g.size(); ++p) EXPECT_EQ(psi[p], before[p]);
}

TEST(Rk4, LinearRotationMatchesTaylorPolynomial) {
  const Grid g = cube(1, 0.0, 1.0, 0.25);
  const double lambda = 2.3, k = 0.07;
  ComplexField psi = testing::random_field(g, 2);
  const ComplexField before(psi);
  Rk4Stepper stepper(g);
  const double sup2 = stepper.step(psi, k, [lambda](const ComplexField& in, ComplexField& out) {
    for (std::size_t p = 0; p < in.size(); ++p) out[p] = Complex(0.0, lambda) * in[p];
  });
  const Complex z(0.0, lambda * k);
  const Complex amp = 1.0 + z + z * z / 2.0 + z * z * z / 6.0 + z * z * z * z / 24.0;
  double m = 0.0;
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_LE(std::abs(psi[p] - amp * before[p]), 1e-15);
    m = std::max(m, std::norm(psi[p]));
  }
  EXPECT_DOUBLE_EQ(sup2, m);
}

TEST(Rk4, FourthOrderInTime) {
  const Grid g = cube(1, 0.0, 1.0, 0.25);
  const auto rhs = [](const ComplexField& in, ComplexField& out) {
    for (std::size_t p = 0; p < in.size(); ++p) out[p] = Complex(-0.5, 1.0) * in[p];
  };
  const auto error_at_one = [&](int n) {
    ComplexField psi(g, Complex(1.0));
    Rk4Stepper stepper(g);
    for (int i = 0; i < n; ++i) stepper.step(psi, 1.0 / n, rhs);
    return std::abs(psi[0] - std::exp(Complex(-0.5, 1.0)));
  };
  const double ratio = error_at_one(10) / error_at_one(20);
  EXPECT_NEAR(std::log2(ratio), 4.0, 0.1);
}

TEST(Rk4, FourEvaluationsPerStepAndNoAllocation) {
  const Grid g = cube(2, 0.0, 1.0, 0.125);
  const RealField v(g, 0.0);
  NlseOperator op(NlseParams{1.0, -1.0, {}}, Scheme::Shoc1x, BoundaryKind::Dirichlet, v);
  ComplexField psi = testing::random_field(g, 3);
  Rk4Stepper stepper(g);
  const auto rhs = [&op](const ComplexField& in, ComplexField& out) { op(in, out); };
  const FieldAllocationStats before = field_allocation_stats();
  for (int n = 0; n < 5; ++n) stepper.step(psi, 1e-4, rhs);
  EXPECT_EQ(field_allocation_stats().total, before.total);
  EXPECT_EQ(stepper.steps(), 5u);
  EXPECT_EQ(stepper.rhs_calls(), 20u);
  EXPECT_EQ(op.evaluations(), 20u);
}

TEST(Rk4, DirichletBoundaryStaysZeroAtEveryStage) {
  const Grid g = cube(2, 0.0, 1.0, 0.125);
  const RealField v(g, 0.0);
  NlseOperator op(NlseParams{1.0, -1.0, {}}, Scheme::Shoc1x, BoundaryKind::Dirichlet, v);
  ComplexField psi = testing::random_field(g, 4);
  for (const BoundaryPoint& bp : op.boundary_map().points()) psi[bp.flat] = Complex(0.0);
  Rk4Stepper stepper(g);
  int stages = 0;
  const auto rhs = [&](const ComplexField& in, ComplexField& out) {
    for (const BoundaryPoint& bp : op.boundary_map().points()) {
      ASSERT_EQ(in[bp.flat], Complex(0.0));
    }
    ++stages;
    op(in, out);
  };
  for (int n = 0; n < 3; ++n) stepper.step(psi, 1e-4, rhs);
  EXPECT_EQ(stages, 12);
  for (const BoundaryPoint& bp : op.boundary_map().points()) EXPECT_EQ(psi[bp.flat], Complex(0.0));
}

TEST(Rk4, NonFiniteResultIsReported) {
  const Grid g = cube(1, 0.0, 1.0, 0.25);
  ComplexField psi(g, Complex(1.0));
  Rk4Stepper stepper(g);
  const double r = stepper.step(psi, 0.1, [](const ComplexField&, ComplexField& out) {
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = Complex(0.0);
    out[2] = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  });
  EXPECT_TRUE(std::isinf(r));
}

}  // namespace
}  // namespace shoc
