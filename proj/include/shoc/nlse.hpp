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

#include <cstddef>
#include <optional>

#include "shoc/boundary.hpp"
#include "shoc/grid.hpp"
#include "shoc/nlse_params.hpp"
#include "shoc/stencils.hpp"

namespace shoc {

/// Samples V on every grid point. Harmonic uses coefficient * |r|^2 with the
/// coefficient defaulting to 1/a; Tabulated must be conformable with `grid`.
RealField build_potential(const Grid& grid, const NlseParams& params);

/// The semi-discrete NLSE right-hand side
///
///   F(psi) = i [a L(psi) + (s |psi|^2 - V) psi]
///
/// with L the Laplacian of the chosen scheme. One evaluation runs
///   step 1 -> Laplacian boundary fill -> step 2 + nonlinear term -> psi_t boundary fill
/// for the two-step schemes, and a single fused sweep + psi_t fill for CD2.
/// The operator owns the scheme's auxiliary fields and reuses them.
class NlseOperator {
 public:
  NlseOperator(const NlseParams& params, Scheme scheme, BoundaryKind bc,
               const RealField& potential);

  NlseOperator(const NlseOperator&) = delete;
  NlseOperator& operator=(const NlseOperator&) = delete;

  void operator()(const ComplexField& psi, ComplexField& out);

  const NlseParams& params() const noexcept { return params_; }
  Scheme scheme() const noexcept { return scheme_; }
  BoundaryKind boundary() const noexcept { return bc_; }
  const BoundaryMap& boundary_map() const noexcept { return map_; }
  std::size_t aux_count() const noexcept { return aux_ ? aux_->count() : 0; }
  const AuxFields* aux() const noexcept { return aux_ ? &*aux_ : nullptr; }
  /// Guard hits accumulated over all evaluations.
  const BoundaryDiagnostics& diagnostics() const noexcept { return diagnostics_; }
  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  NlseParams params_;
  Scheme scheme_;
  BoundaryKind bc_;
  const RealField& potential_;
  BoundaryMap map_;
  std::optional<AuxFields> aux_;
  BoundaryDiagnostics diagnostics_;
  std::size_t evaluations_ = 0;
};

}  // namespace shoc
