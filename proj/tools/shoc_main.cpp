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

// Command-line front end. Talks to the solver only through the C API.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shoc/shoc.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInstability = 3;
constexpr int kExitAcceptance = 4;

constexpr double kEquivTolerance = 1e-12;

// Thrown to unwind with a given exit code after the message was printed.
struct Exit {
  int code;
};

int exit_code_for(shoc_status s) {
  switch (s) {
    case SHOC_OK:
      return kExitOk;
    case SHOC_ERR_CONFIG:
    case SHOC_ERR_IO:
    case SHOC_ERR_INVALID_ARGUMENT:
      return kExitConfig;
    case SHOC_ERR_INSTABILITY:
      return kExitInstability;
    case SHOC_ERR_ACCEPTANCE:
      return kExitAcceptance;
    default:
      return kExitInternal;
  }
}

void check(shoc_status s) {
  if (s == SHOC_OK) return;
  const std::string field = shoc_last_error_field();
  if (s == SHOC_ERR_CONFIG && !field.empty()) {
    std::cerr << "shoc: config error in '" << field << "': " << shoc_last_error() << "\n";
  } else {
    std::cerr << "shoc: " << shoc_last_error() << "\n";
  }
  throw Exit{exit_code_for(s)};
}

struct ConfigDeleter {
  void operator()(shoc_config* c) const { shoc_config_destroy(c); }
};
struct RunDeleter {
  void operator()(shoc_run* r) const { shoc_run_destroy(r); }
};
using ConfigPtr = std::unique_ptr<shoc_config, ConfigDeleter>;
using RunPtr = std::unique_ptr<shoc_run, RunDeleter>;

struct Options {
  std::string config_path;
  std::optional<std::string> ic, dim, scheme, bc, h, h_list, k, t_end, snapshots, out, threads,
      seed;
  std::optional<double> k_auto_safety;
  std::vector<std::string> sets;
  bool json = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "Key/value configuration file");
  cmd->add_option("--ic", o.ic, "Initial condition: dark_soliton | gaussian | constant | file");
  cmd->add_option("--dim", o.dim, "Spatial dimension (1, 2 or 3)");
  cmd->add_option("--scheme", o.scheme, "cd2 | 2shoc | 2shoc-multi");
  cmd->add_option("--bc", o.bc, "dirichlet | msd");
  cmd->add_option("--h", o.h, "Grid spacing (fractions like 1/32 allowed)");
  cmd->add_option("--h-list", o.h_list, "Comma-separated spacings for a convergence sweep");
  cmd->add_option("--k", o.k, "Time step, or 'auto'");
  cmd->add_option("--k-auto-safety", o.k_auto_safety,
                  "Choose k as this fraction of the stability bound");
  cmd->add_option("--t-end", o.t_end, "Final time");
  cmd->add_option("--snapshots", o.snapshots, "Number of equally spaced snapshots");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--threads", o.threads, "OpenMP threads");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--set", o.sets, "Extra key=value override (repeatable)");
}

ConfigPtr build_config(const Options& o) {
  shoc_config* raw = nullptr;
  check(shoc_config_create(&raw));
  ConfigPtr cfg(raw);
  if (!o.config_path.empty()) check(shoc_config_load_file(cfg.get(), o.config_path.c_str()));
  const auto set = [&](const char* key, const std::optional<std::string>& v) {
    if (v) check(shoc_config_set(cfg.get(), key, v->c_str()));
  };
  set("problem.ic", o.ic);
  set("problem.dim", o.dim);
  set("scheme", o.scheme);
  set("bc", o.bc);
  set("grid.h", o.h);
  set("grid.h_list", o.h_list);
  set("time.k", o.k);
  set("time.t_end", o.t_end);
  set("time.snapshots", o.snapshots);
  set("output.dir", o.out);
  set("run.threads", o.threads);
  set("run.seed", o.seed);
  if (o.k_auto_safety) {
    check(shoc_config_set(cfg.get(), "time.k", "auto"));
    check(shoc_config_set(cfg.get(), "time.safety", std::to_string(*o.k_auto_safety).c_str()));
  }
  for (const std::string& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "shoc: --set expects key=value, got '" << kv << "'\n";
      throw Exit{kExitConfig};
    }
    const std::string key = CLI::detail::trim_copy(kv.substr(0, eq));
    const std::string value = CLI::detail::trim_copy(kv.substr(eq + 1));
    check(shoc_config_set(cfg.get(), key.c_str(), value.c_str()));
  }
  check(shoc_config_validate(cfg.get()));
  return cfg;
}

std::string get(const shoc_config* cfg, const char* key) {
  std::size_t n = 0;
  check(shoc_config_get(cfg, key, nullptr, 0, &n));
  std::string out(n + 1, '\0');
  check(shoc_config_get(cfg, key, out.data(), out.size(), nullptr));
  out.resize(n);
  return out;
}

std::string resolved_text(const shoc_config* cfg) {
  std::size_t n = 0;
  check(shoc_config_resolved_text(cfg, nullptr, 0, &n));
  std::string out(n + 1, '\0');
  check(shoc_config_resolved_text(cfg, out.data(), out.size(), nullptr));
  out.resize(n);
  return out;
}

json config_json(const shoc_config* cfg) {
  json j = json::object();
  std::istringstream in(resolved_text(cfg));
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) j[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return j;
}

std::string comment_block(const shoc_config* cfg) {
  std::string out;
  std::istringstream in(resolved_text(cfg));
  std::string line;
  while (std::getline(in, line)) out += "# " + line + "\n";
  return out;
}

void apply_threads(const shoc_config* cfg) {
  check(shoc_set_threads(std::stoi(get(cfg, "run.threads"))));
}

std::vector<double> parse_h_list(const std::string& text) {
  std::vector<double> hs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto slash = item.find('/');
    hs.push_back(slash == std::string::npos
                     ? std::stod(item)
                     : std::stod(item.substr(0, slash)) / std::stod(item.substr(slash + 1)));
  }
  return hs;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json grid_json(const shoc_grid_info& g) {
  json counts = json::array(), mins = json::array(), maxs = json::array();
  for (int a = 0; a < g.dim; ++a) {
    counts.push_back(g.counts[a]);
    mins.push_back(g.mins[a]);
    maxs.push_back(g.maxs[a]);
  }
  return {{"dim", g.dim}, {"h", g.h}, {"counts", counts}, {"min", mins}, {"max", maxs},
          {"points", g.points}};
}

// Deterministic fields only; timing goes to stdout.
json report_json(const shoc_run_report& r) {
  json j;
  j["scheme"] = shoc_scheme_name(r.scheme);
  j["bc"] = shoc_bc_name(r.bc);
  j["grid"] = grid_json(r.grid);
  j["k"] = r.k;
  j["k_max"] = r.k_max;
  j["k_over_k_max"] = r.k / r.k_max;
  j["dominant_term"] = r.dominant == SHOC_DOMINANT_BOUNDARY ? "boundary" : "interior";
  j["steps"] = r.steps;
  j["rhs_calls"] = r.rhs_calls;
  j["snapshots_requested"] = r.snapshots_requested;
  j["snapshots_completed"] = r.snapshots_completed;
  j["snapshot_policy"] = shoc_snapshot_policy();
  j["e_real"] = number_or_null(r.e_real);
  j["e_imag"] = number_or_null(r.e_imag);
  j["buffers"] = r.buffers;
  j["expected_buffers"] = r.expected_buffers;
  j["guarded_points"] = r.guarded_points;
  j["initial_sup"] = r.initial_sup;
  j["final_sup"] = r.final_sup;
  j["completed"] = r.completed != 0;
  if (!r.completed) {
    j["failure"] = {{"message", r.failure},
                    {"step", r.failure_step},
                    {"time", r.failure_time}};
  }
  return j;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "shoc: cannot write '" << path.string() << "'\n";
    throw Exit{kExitConfig};
  }
  out << text;
}

fs::path prepare_out_dir(const shoc_config* cfg) {
  const fs::path dir = get(cfg, "output.dir");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    std::cerr << "shoc: cannot create '" << dir.string() << "': " << ec.message() << "\n";
    throw Exit{kExitConfig};
  }
  return dir;
}

// ---------------------------------------------------------------------------
// run

struct SnapshotWriter {
  fs::path dir;
  std::string header;
  shoc_grid_info grid;
  int digits;
};

int write_snapshot(void* user, int index, double t, const double* psi, size_t points) {
  const auto& w = *static_cast<const SnapshotWriter*>(user);
  char name[64];
  std::snprintf(name, sizeof(name), "snapshot_%0*d.csv", w.digits, index);
  std::ofstream out(w.dir / name);
  if (!out) return 1;
  out << w.header << "# t = " << fmt("%.17g", t) << "\n";
  static const char* axes[] = {"x", "y", "z"};
  for (int a = 0; a < w.grid.dim; ++a) out << axes[a] << ",";
  out << "re,im,density\n";
  // Flat index -> coordinates; the last axis is contiguous.
  std::size_t idx[3] = {0, 0, 0};
  char buf[160];
  for (std::size_t p = 0; p < points; ++p) {
    for (int a = 0; a < w.grid.dim; ++a) {
      const double x = w.grid.mins[a] + w.grid.h * double(idx[a]);
      std::snprintf(buf, sizeof(buf), "%.10g,", x);
      out << buf;
    }
    const double re = psi[2 * p], im = psi[2 * p + 1];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", re, im, re * re + im * im);
    out << buf;
    for (int a = w.grid.dim - 1; a >= 0; --a) {
      if (++idx[a] < w.grid.counts[a]) break;
      idx[a] = 0;
    }
  }
  return out ? 0 : 1;
}

int cmd_run(const Options& o) {
  ConfigPtr cfg = build_config(o);
  apply_threads(cfg.get());
  const fs::path dir = prepare_out_dir(cfg.get());

  shoc_run* raw = nullptr;
  check(shoc_run_create(cfg.get(), 0.0, &raw));
  RunPtr run(raw);

  SnapshotWriter writer{dir, comment_block(cfg.get()), {}, 4};
  check(shoc_run_grid(run.get(), &writer.grid));
  const int snapshots = std::stoi(get(cfg.get(), "time.snapshots"));
  writer.digits = std::max(4, int(std::to_string(snapshots).size()));
  const bool write = get(cfg.get(), "output.write_snapshots") == "true";

  const shoc_status status =
      shoc_run_execute(run.get(), write ? write_snapshot : nullptr, &writer);
  if (status != SHOC_OK && status != SHOC_ERR_INSTABILITY) check(status);
  const std::string failure = status == SHOC_OK ? "" : shoc_last_error();

  shoc_run_report rep{};
  check(shoc_run_report_get(run.get(), &rep));
  std::vector<double> t(rep.snapshots_completed), er(t.size()), ei(t.size());
  std::size_t count = 0;
  check(shoc_run_snapshot_errors(run.get(), t.data(), er.data(), ei.data(), t.size(), &count));

  json j;
  j["config"] = config_json(cfg.get());
  j["report"] = report_json(rep);
  json snaps = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    snaps.push_back({{"t", t[i]}, {"e_real", number_or_null(er[i])},
                     {"e_imag", number_or_null(ei[i])}});
  }
  j["snapshots"] = snaps;
  write_file(dir / "report.json", j.dump(2) + "\n");

  std::ostringstream txt;
  txt << comment_block(cfg.get());
  txt << "scheme   " << shoc_scheme_name(rep.scheme) << "\n";
  txt << "bc       " << shoc_bc_name(rep.bc) << "\n";
  txt << "points   " << rep.grid.points << "\n";
  txt << "h        " << fmt("%.6g", rep.grid.h) << "\n";
  txt << "k        " << fmt("%.6g", rep.k) << "   (k_max " << fmt("%.6g", rep.k_max) << ")\n";
  txt << "steps    " << rep.steps << "\n";
  txt << "buffers  " << rep.buffers << "N (expected " << rep.expected_buffers << "N)\n";
  txt << "E_real   " << fmt("%.5g", rep.e_real) << "\n";
  txt << "E_imag   " << fmt("%.5g", rep.e_imag) << "\n";
  txt << "\n" << std::string(12, ' ') << "t" << std::string(10, ' ') << "E_real"
      << std::string(10, ' ') << "E_imag\n";
  for (std::size_t i = 0; i < count; ++i) {
    char line[128];
    std::snprintf(line, sizeof(line), "%13.6g %15.6g %15.6g\n", t[i], er[i], ei[i]);
    txt << line;
  }
  write_file(dir / "report.txt", txt.str());

  std::cout << "scheme " << shoc_scheme_name(rep.scheme) << ", bc " << shoc_bc_name(rep.bc)
            << ", N = " << rep.grid.points << ", k = " << fmt("%.6g", rep.k) << " (k/k_max "
            << fmt("%.4g", rep.k / rep.k_max) << ")\n";
  std::cout << "E_real = " << fmt("%.5g", rep.e_real) << ", E_imag = " << fmt("%.5g", rep.e_imag)
            << ", wall " << fmt("%.2f", rep.wall_seconds) << " s\n";
  std::cout << "wrote " << (dir / "report.json").string() << "\n";
  if (!failure.empty()) {
    std::cerr << "shoc: instability: " << failure << "\n";
    return kExitInstability;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// converge

struct Sweep {
  std::string scheme;
  std::vector<shoc_convergence_row> rows;
  int has_overall = 0;
  double overall = 0.0;
  shoc_status status = SHOC_OK;
  std::string failure;
};

Sweep sweep(const shoc_config* base, const std::string& scheme, const std::vector<double>& hs) {
  shoc_config* raw = nullptr;
  check(shoc_config_clone(base, &raw));
  ConfigPtr cfg(raw);
  check(shoc_config_set(cfg.get(), "scheme", scheme.c_str()));
  check(shoc_config_validate(cfg.get()));
  Sweep s;
  s.scheme = scheme;
  s.rows.resize(hs.size());
  s.status = shoc_converge(cfg.get(), hs.data(), hs.size(), s.rows.data(), &s.has_overall,
                           &s.overall);
  if (s.status != SHOC_OK && s.status != SHOC_ERR_INSTABILITY) check(s.status);
  if (s.status != SHOC_OK) s.failure = shoc_last_error();
  return s;
}

std::string h_label(double h) {
  if (h >= 1.0 || std::abs(1.0 / h - std::round(1.0 / h)) > 1e-9) return fmt("%.6g", h);
  return "1/" + fmt("%.0f", std::round(1.0 / h));
}

std::string sweep_table(const std::vector<Sweep>& sweeps, const std::vector<double>& hs) {
  std::ostringstream t;
  char cell[64];
  t << std::string(22, ' ');
  for (double h : hs) {
    std::snprintf(cell, sizeof(cell), "%14s", ("h = " + h_label(h)).c_str());
    t << cell;
  }
  t << "\n";
  for (const Sweep& s : sweeps) {
    const auto row = [&](const char* label, auto value) {
      std::snprintf(cell, sizeof(cell), "%-12s%-10s", s.scheme.c_str(), label);
      t << cell;
      for (const auto& r : s.rows) {
        const std::optional<double> v = value(r);
        if (v) std::snprintf(cell, sizeof(cell), "%14.5g", *v);
        else std::snprintf(cell, sizeof(cell), "%14s", "-");
        t << cell;
      }
      t << "\n";
    };
    using Row = const shoc_convergence_row&;
    row("E real", [](Row r) { return std::optional<double>(r.report.e_real); });
    row("E imag", [](Row r) { return std::optional<double>(r.report.e_imag); });
    row("ord real", [](Row r) {
      return r.has_order ? std::optional<double>(r.order_real) : std::nullopt;
    });
    row("ord imag", [](Row r) {
      return r.has_order ? std::optional<double>(r.order_imag) : std::nullopt;
    });
    if (s.has_overall) t << s.scheme << " overall order m = " << fmt("%.4f", s.overall) << "\n";
  }
  return t.str();
}

int cmd_converge(const Options& o, bool with_cd2) {
  ConfigPtr cfg = build_config(o);
  apply_threads(cfg.get());
  const fs::path dir = prepare_out_dir(cfg.get());
  const std::vector<double> hs = parse_h_list(get(cfg.get(), "grid.h_list"));
  const std::string scheme = get(cfg.get(), "scheme");

  std::vector<Sweep> sweeps;
  if (with_cd2 && scheme != "cd2") sweeps.push_back(sweep(cfg.get(), "cd2", hs));
  sweeps.push_back(sweep(cfg.get(), scheme, hs));

  json j;
  j["config"] = config_json(cfg.get());
  j["snapshot_policy"] = shoc_snapshot_policy();
  json js = json::array();
  for (const Sweep& s : sweeps) {
    json rows = json::array();
    for (const auto& r : s.rows) {
      json row = {{"h", r.h}, {"e_real", number_or_null(r.report.e_real)},
                  {"e_imag", number_or_null(r.report.e_imag)}};
      row["order_real"] = r.has_order ? json(r.order_real) : json(nullptr);
      row["order_imag"] = r.has_order ? json(r.order_imag) : json(nullptr);
      row["report"] = report_json(r.report);
      rows.push_back(row);
    }
    js.push_back({{"scheme", s.scheme},
                  {"rows", rows},
                  {"overall_order", s.has_overall ? json(s.overall) : json(nullptr)}});
  }
  j["sweeps"] = js;
  write_file(dir / "convergence.json", j.dump(2) + "\n");

  const std::string table = sweep_table(sweeps, hs);
  write_file(dir / "convergence.txt", comment_block(cfg.get()) + table);
  std::cout << table;

  int code = kExitOk;
  for (const Sweep& s : sweeps) {
    if (s.status != SHOC_OK) {
      std::cerr << "shoc: " << s.scheme << " sweep: instability: " << s.failure << "\n";
      code = kExitInstability;
    }
  }
  return code;
}

// ---------------------------------------------------------------------------
// stability

int cmd_stability(const Options& o) {
  ConfigPtr cfg = build_config(o);
  apply_threads(cfg.get());
  shoc_stability_info info{};
  check(shoc_stability(cfg.get(), &info));
  const char* dominant = info.dominant == SHOC_DOMINANT_BOUNDARY ? "boundary" : "interior";
  if (o.json) {
    json j;
    j["config"] = config_json(cfg.get());
    j["grid"] = grid_json(info.grid);
    j["k_max"] = info.k_max;
    j["k"] = info.k_chosen;
    j["k_source"] = info.k_explicit ? "explicit" : "auto";
    j["dominant_term"] = dominant;
    j["boundary_norm"] = info.boundary_norm;
    j["interior_norm"] = info.interior_norm;
    j["guarded_points"] = info.guarded_points;
    j["linear_dirichlet_bound"] = info.linear_bound;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "k_max           " << fmt("%.6g", info.k_max) << "\n";
  std::cout << "k               " << fmt("%.6g", info.k_chosen)
            << (info.k_explicit ? "   (explicit)" : "   (auto)") << "\n";
  std::cout << "k / k_max       " << fmt("%.4g", info.k_chosen / info.k_max) << "\n";
  std::cout << "dominant term   " << dominant << "\n";
  std::cout << "max |B_b|       " << fmt("%.6g", info.boundary_norm) << "\n";
  std::cout << "max |L_i - g|   " << fmt("%.6g", info.interior_norm) << "\n";
  std::cout << "linear bound    " << fmt("%.6g", info.linear_bound) << "\n";
  if (info.guarded_points) std::cout << "guarded points  " << info.guarded_points << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// equiv

int scheme_id(const std::string& name) {
  if (name == "cd2" || name == "cd") return SHOC_SCHEME_CD2;
  if (name == "2shoc" || name == "2shoc-1x") return SHOC_SCHEME_2SHOC;
  if (name == "2shoc-multi") return SHOC_SCHEME_2SHOC_MULTI;
  if (name == "wide4") return SHOC_SCHEME_WIDE4;
  return -1;
}

int cmd_equiv(Options o, int trials, std::size_t points) {
  // The random fields ignore the initial condition; pick one valid for dim.
  if (!o.ic && o.dim && *o.dim != "1") o.ic = "gaussian";
  ConfigPtr cfg = build_config(o);
  apply_threads(cfg.get());
  const int dim = std::stoi(get(cfg.get(), "problem.dim"));
  const std::string scheme = get(cfg.get(), "scheme");
  const auto seed = std::stoull(get(cfg.get(), "run.seed"));
  if (trials <= 0) trials = std::stoi(get(cfg.get(), "equiv.trials"));
  double dev = 0.0;
  check(shoc_equivalence_check(dim, scheme_id(scheme), trials, seed, points, &dev));
  const bool pass = dev <= kEquivTolerance;
  if (o.json) {
    json j = {{"dim", dim},         {"variant", scheme},       {"trials", trials},
              {"seed", seed},       {"max_deviation", dev},    {"tolerance", kEquivTolerance},
              {"pass", pass}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << dim << "D " << scheme << ", " << trials << " trials, seed " << seed
              << ": max relative deviation " << fmt("%.3e", dev) << " -> "
              << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitAcceptance;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const Options& o, int steps) {
  ConfigPtr cfg = build_config(o);
  apply_threads(cfg.get());
  const int dim = std::stoi(get(cfg.get(), "problem.dim"));
  const std::string bc = get(cfg.get(), "bc");
  if (steps <= 0) steps = std::stoi(get(cfg.get(), "bench.steps"));

  std::vector<int> schemes = {SHOC_SCHEME_CD2, SHOC_SCHEME_2SHOC};
  if (dim >= 2 && bc == "dirichlet") schemes.push_back(SHOC_SCHEME_2SHOC_MULTI);

  json rows = json::array();
  bool all_ok = true;
  std::printf("%-12s %10s %14s %14s %10s %9s\n", "scheme", "points", "s/step", "ns/pt/step",
              "storage", "audit");
  for (int s : schemes) {
    shoc_bench_result r{};
    check(shoc_bench(cfg.get(), s, steps, &r));
    all_ok = all_ok && r.storage_ok;
    const std::string storage =
        std::to_string(r.storage_measured) + "N/" + std::to_string(r.storage_expected) + "N";
    std::printf("%-12s %10zu %14.4g %14.4g %10s %9s\n", shoc_scheme_name(s), r.points,
                r.seconds_per_step, r.ns_per_point_step, storage.c_str(),
                r.storage_ok ? "ok" : "MISMATCH");
    rows.push_back({{"scheme", shoc_scheme_name(s)},
                    {"points", r.points},
                    {"steps", r.steps},
                    {"seconds_per_step", r.seconds_per_step},
                    {"ns_per_point_step", r.ns_per_point_step},
                    {"storage_measured", r.storage_measured},
                    {"storage_expected", r.storage_expected},
                    {"allocations_during_steps", r.allocations_during_steps},
                    {"storage_ok", r.storage_ok != 0}});
  }
  if (o.json) {
    json j;
    j["config"] = config_json(cfg.get());
    j["results"] = rows;
    std::cout << j.dump(2) << "\n";
  }
  return all_ok ? kExitOk : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourth-order compact NLSE solver and verification harness"};
  app.require_subcommand(1);
  // "--h" is the grid spacing, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", shoc_version());

  Options o;
  bool with_cd2 = false;
  int trials = 0;
  std::size_t points = 0;
  int steps = 0;

  CLI::App* run = app.add_subcommand("run", "Integrate one configuration and write snapshots");
  add_common(run, o);

  CLI::App* converge = app.add_subcommand("converge", "Error and order table over grid.h_list");
  add_common(converge, o);
  converge->add_flag("--with-cd2", with_cd2, "Also sweep the second-order scheme");

  CLI::App* stability = app.add_subcommand("stability", "Print the time-step bound");
  add_common(stability, o);
  stability->add_flag("--json", o.json, "Print JSON");

  CLI::App* equiv = app.add_subcommand("equiv", "Compact vs wide stencil on random fields");
  add_common(equiv, o);
  equiv->add_option("--trials", trials, "Number of random fields (default equiv.trials)");
  equiv->add_option("--points", points, "Points per axis (default 65/33/17 for 1D/2D/3D)");
  equiv->add_flag("--json", o.json, "Print JSON");

  CLI::App* bench = app.add_subcommand("bench", "Time RK4 steps per scheme and audit storage");
  add_common(bench, o);
  bench->add_option("--steps", steps, "Steps per scheme (default bench.steps)");
  bench->add_flag("--json", o.json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return cmd_run(o);
    if (*converge) return cmd_converge(o, with_cd2);
    if (*stability) return cmd_stability(o);
    if (*equiv) return cmd_equiv(o, trials, points);
    if (*bench) return cmd_bench(o, steps);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "shoc: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
