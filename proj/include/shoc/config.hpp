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

// Run configuration: a flat map of dotted keys ("time.t_end = 10") resolved
// into a validated RunConfig. Defaults follow the experiment selected by
// problem.ic; every resolved value can be printed back for provenance.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shoc/analytic.hpp"
#include "shoc/boundary.hpp"
#include "shoc/nlse_params.hpp"
#include "shoc/stencils.hpp"

namespace shoc {

using ConfigMap = std::map<std::string, std::string>;

/// Parses "key = value" lines. '#' starts a comment; blank lines are skipped.
/// Throws ConfigError on malformed lines or duplicate keys.
ConfigMap parse_config_text(std::string_view text);
ConfigMap load_config_file(const std::string& path);
/// One "key = value" line per entry, sorted by key.
std::string format_config(const ConfigMap& map);

/// Real number; also accepts a fraction such as "1/32".
double parse_real(std::string_view text);

/// What the Euclidean norm of the pointwise error is divided by.
enum class ErrorDivisor {
  SqrtN,  ///< root mean square over the grid
  N,      ///< per-point average
};

enum class InitialKind {
  DarkSoliton,
  Gaussian,
  Constant,  ///< psi = ic.value everywhere; no exact solution
  File,
};

struct RunConfig {
  int dim = 1;
  InitialKind ic = InitialKind::DarkSoliton;
  std::string ic_path;
  double ic_value = 1.0;
  double soliton_omega = -1.0;
  double soliton_c = 0.5;

  NlseParams params{1.0, -1.0, Potential::none()};
  std::string potential_path;

  Scheme scheme = Scheme::Shoc1x;
  BoundaryKind bc = BoundaryKind::Msd;

  double h = 1.0 / 32.0;
  std::vector<double> h_list;
  std::optional<double> k;       ///< unset: safety * k_max
  std::optional<double> safety;  ///< unset: 0.9 in 1D, 0.8 otherwise

  double t_end = 10.0;
  int snapshots = 100;

  bool auto_domain = true;
  std::vector<AxisExtent> domain;  ///< explicit extents when !auto_domain
  double epsilon = kMachineEpsilon;
  SnapMode snap = SnapMode::Nearest;

  std::string out_dir = "out";
  bool write_snapshots = true;
  std::uint64_t seed = 1;
  int threads = 1;
  int recheck_every = 0;  ///< steps between stability re-checks; 0 disables
  double blowup_factor = 10.0;

  ErrorDivisor error_divisor = ErrorDivisor::SqrtN;

  int equiv_trials = 100;
  int bench_steps = 20;

  /// The closed-form solution the run is compared against, if any.
  std::optional<ExactSolution> exact() const;
  /// Every key with its resolved value.
  ConfigMap to_map() const;
};

/// Applies defaults and validates. Unknown keys and inconsistent combinations
/// raise ConfigError naming the key.
RunConfig resolve_config(const ConfigMap& raw);

/// Keys recognised by resolve_config.
const std::vector<std::string>& known_config_keys();

}  // namespace shoc
