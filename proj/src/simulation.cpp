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

#include "shoc/simulation.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "shoc/analytic.hpp"
#include "shoc/error.hpp"

namespace shoc {

namespace {

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Selected columns of a numeric CSV. '#' lines are skipped. If the first
// remaining row is a header, columns are picked by name; otherwise the
// trailing names.size() columns are used.
std::vector<std::vector<double>> read_columns(const std::string& path,
                                              const std::vector<std::string>& names) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> picked;
  bool first = true;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty() || line[0] == '#') continue;
    const std::vector<std::string> cells = split_cells(line);
    std::vector<double> values;
    bool numeric = true;
    for (const std::string& c : cells) {
      try {
        values.push_back(parse_real(c));
      } catch (const Error&) {
        numeric = false;
        break;
      }
    }
    const std::string where = path + ":" + std::to_string(lineno);
    if (!numeric) {
      if (!first) throw IoError(where + ": not a number");
      first = false;
      for (const std::string& name : names) {
        std::size_t col = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (strip(cells[c]) == name) col = c;
        }
        if (col == cells.size()) throw IoError(where + ": no column named '" + name + "'");
        picked.push_back(col);
      }
      continue;
    }
    first = false;
    if (picked.empty()) {
      if (values.size() < names.size()) {
        throw IoError(where + ": expected " + std::to_string(names.size()) + " columns");
      }
      for (std::size_t i = 0; i < names.size(); ++i) {
        picked.push_back(values.size() - names.size() + i);
      }
    }
    std::vector<double> row;
    for (std::size_t col : picked) {
      if (col >= values.size()) throw IoError(where + ": missing column");
      row.push_back(values[col]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void require_rows(const std::string& path, std::size_t got, const Grid& grid) {
  if (got != grid.size()) {
    throw IoError(path + ": " + std::to_string(got) + " rows for a grid of " +
                  std::to_string(grid.size()) + " points");
  }
}

RealField load_potential(const RunConfig& cfg, const Grid& grid) {
  NlseParams params = cfg.params;
  if (params.potential.kind == Potential::Kind::Tabulated && !params.potential.table) {
    params.potential.table =
        std::make_shared<const RealField>(read_real_csv(cfg.potential_path, grid));
  }
  return build_potential(grid, params);
}

ComplexField initial_field(const RunConfig& cfg, const Grid& grid) {
  if (cfg.ic == InitialKind::File) return read_complex_csv(cfg.ic_path, grid);
  if (cfg.ic == InitialKind::Constant) return ComplexField(grid, Complex(cfg.ic_value, 0.0));
  ComplexField psi(grid);
  sample(*cfg.exact(), 0.0, psi);
  return psi;
}

}  // namespace

Grid make_run_grid(const RunConfig& cfg, double h) {
  std::vector<AxisExtent> extents = cfg.domain;
  if (cfg.auto_domain) {
    const auto exact = cfg.exact();
    if (!exact) throw ConfigError("domain.mode", "auto domain needs an analytic initial condition");
    extents = snap_to_grid(auto_domain(*exact, cfg.t_end, cfg.epsilon), h, cfg.snap);
  }
  if (extents.size() != std::size_t(cfg.dim)) {
    throw ConfigError("domain.min", "needs one extent per axis");
  }
  std::vector<double> mins, maxs;
  for (const AxisExtent& e : extents) {
    mins.push_back(e.min);
    maxs.push_back(e.max);
  }
  return Grid::make(cfg.dim, mins, maxs, h);
}

ComplexField read_complex_csv(const std::string& path, const Grid& grid) {
  const auto rows = read_columns(path, {"re", "im"});
  require_rows(path, rows.size(), grid);
  ComplexField out(grid);
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = Complex(rows[i][0], rows[i][1]);
  if (!all_finite(out)) throw IoError(path + ": non-finite values");
  return out;
}

RealField read_real_csv(const std::string& path, const Grid& grid) {
  const auto rows = read_columns(path, {"v"});
  require_rows(path, rows.size(), grid);
  RealField out(grid);
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i][0];
  if (!all_finite(out)) throw IoError(path + ": non-finite values");
  return out;
}

Simulation::Simulation(const RunConfig& cfg, double h)
    : cfg_(cfg),
      grid_(make_run_grid(cfg, h)),
      potential_(load_potential(cfg, grid_)),
      psi_(initial_field(cfg, grid_)),
      op_(cfg.params, cfg.scheme, cfg.bc, potential_),
      stepper_(grid_) {
  bound_ = stability_bound(psi_, potential_, cfg_.params, cfg_.bc);
  k_ = cfg_.k ? *cfg_.k : choose_timestep(bound_.k_max, grid_.dim(), cfg_.safety);
  initial_sup_ = norm_sup(psi_);
  current_sup_ = initial_sup_;
}

void Simulation::advance_to(double t) {
  if (!(t >= time_)) throw InvalidArgument("advance_to: cannot step backwards");
  const auto rhs = [this](const ComplexField& in, ComplexField& out) { op_(in, out); };
  while (time_ < t) {
    const double remaining = t - time_;
    const bool last = remaining <= k_ * (1.0 + 1e-9);
    const double dt = last ? remaining : k_;
    const double max_mod2 = stepper_.step(psi_, dt, rhs);
    time_ = last ? t : time_ + dt;
    current_sup_ = std::sqrt(max_mod2);

    if (!std::isfinite(max_mod2)) {
      throw InstabilityError("solution became non-finite", stepper_.steps(), time_, k_,
                             bound_.k_max);
    }
    if (current_sup_ > cfg_.blowup_factor * initial_sup_) {
      throw InstabilityError("sup-norm exceeded blow-up threshold", stepper_.steps(), time_, k_,
                             bound_.k_max);
    }
    if (cfg_.recheck_every > 0 && stepper_.steps() % std::size_t(cfg_.recheck_every) == 0) {
      const StabilityBound now = stability_bound(psi_, potential_, cfg_.params, cfg_.bc);
      if (k_ > now.k_max) {
        throw InstabilityError("time step exceeds re-checked stability bound", stepper_.steps(),
                               time_, k_, now.k_max);
      }
    }
  }
}

}  // namespace shoc
