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

#include "shoc/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "shoc/error.hpp"

namespace shoc {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return char(std::tolower(ch)); });
  return s;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::string item = trim(text.substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_real(values[i]);
  }
  return out;
}

const std::vector<std::string> kKeys = {
    "problem.dim",        "problem.ic",         "ic.path",          "ic.value",          "soliton.omega",
    "soliton.c",          "nlse.a",             "nlse.s",           "nlse.potential",
    "potential.coefficient", "potential.path",  "scheme",           "bc",
    "grid.h",             "grid.h_list",        "time.k",           "time.safety",
    "time.t_end",         "time.snapshots",     "domain.mode",      "domain.min",
    "domain.max",         "domain.epsilon",     "domain.snap",      "output.dir",
    "output.write_snapshots", "run.seed",       "run.threads",      "stability.recheck_every",
    "stability.blowup_factor", "equiv.trials",  "bench.steps",      "error.divisor",
};

class Reader {
 public:
  explicit Reader(const ConfigMap& raw) : raw_(raw) {
    for (const auto& [key, value] : raw_) {
      if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
        throw ConfigError(key, "unknown configuration key");
      }
    }
  }

  bool has(const std::string& key) const { return raw_.count(key) != 0; }

  std::optional<std::string> text(const std::string& key) const {
    const auto it = raw_.find(key);
    if (it == raw_.end()) return std::nullopt;
    return it->second;
  }

  double real(const std::string& key, double fallback) const {
    const auto t = text(key);
    if (!t) return fallback;
    try {
      return parse_real(*t);
    } catch (const Error&) {
      throw ConfigError(key, "expected a number, got '" + *t + "'");
    }
  }

  long integer(const std::string& key, long fallback) const {
    const auto t = text(key);
    if (!t) return fallback;
    long v = 0;
    const auto res = std::from_chars(t->data(), t->data() + t->size(), v);
    if (res.ec != std::errc() || res.ptr != t->data() + t->size()) {
      throw ConfigError(key, "expected an integer, got '" + *t + "'");
    }
    return v;
  }

  bool boolean(const std::string& key, bool fallback) const {
    const auto t = text(key);
    if (!t) return fallback;
    const std::string v = lower(*t);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(key, "expected true/false, got '" + *t + "'");
  }

  std::vector<double> reals(const std::string& key) const {
    std::vector<double> out;
    const auto t = text(key);
    if (!t) return out;
    for (const std::string& item : split_list(*t)) {
      try {
        out.push_back(parse_real(item));
      } catch (const Error&) {
        throw ConfigError(key, "expected a comma-separated list of numbers");
      }
    }
    return out;
  }

 private:
  const ConfigMap& raw_;
};

}  // namespace

double parse_real(std::string_view text) {
  const std::string t = trim(text);
  const auto parse_one = [](std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) {
      throw InvalidArgument("not a number: '" + std::string(s) + "'");
    }
    return v;
  };
  const std::size_t slash = t.find('/');
  if (slash == std::string::npos) return parse_one(t);
  const double num = parse_one(trim(std::string_view(t).substr(0, slash)));
  const double den = parse_one(trim(std::string_view(t).substr(slash + 1)));
  if (den == 0.0) throw InvalidArgument("division by zero in '" + t + "'");
  return num / den;
}

ConfigMap parse_config_text(std::string_view text) {
  ConfigMap map;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
    }
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno), "empty key");
    if (!map.emplace(key, value).second) throw ConfigError(key, "duplicate key");
  }
  return map;
}

ConfigMap load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string format_config(const ConfigMap& map) {
  std::string out;
  for (const auto& [key, value] : map) out += key + " = " + value + "\n";
  return out;
}

const std::vector<std::string>& known_config_keys() { return kKeys; }

RunConfig resolve_config(const ConfigMap& raw) {
  const Reader r(raw);
  RunConfig c;

  const std::string ic = lower(r.text("problem.ic").value_or("dark_soliton"));
  if (ic == "dark_soliton") {
    c.ic = InitialKind::DarkSoliton;
  } else if (ic == "gaussian") {
    c.ic = InitialKind::Gaussian;
  } else if (ic == "file") {
    c.ic = InitialKind::File;
  } else if (ic == "constant") {
    c.ic = InitialKind::Constant;
  } else {
    throw ConfigError("problem.ic", "expected dark_soliton, gaussian, constant or file");
  }
  const bool analytic = c.ic == InitialKind::DarkSoliton || c.ic == InitialKind::Gaussian;

  // Experiment defaults.
  double default_s = -1.0;
  std::string default_potential = "none";
  BoundaryKind default_bc = BoundaryKind::Msd;
  int default_dim = 1;
  if (c.ic == InitialKind::Gaussian) {
    default_s = 0.0;
    default_potential = "harmonic";
    default_bc = BoundaryKind::Dirichlet;
    default_dim = 2;
  } else if (!analytic) {
    default_s = 0.0;
    default_bc = BoundaryKind::Dirichlet;
  }

  c.dim = int(r.integer("problem.dim", default_dim));
  if (c.dim < 1 || c.dim > 3) throw ConfigError("problem.dim", "must be 1, 2 or 3");

  double default_h = 1.0 / 32.0;
  std::vector<double> default_h_list = {0.5, 0.25, 0.125, 0.0625, 0.03125};
  double default_k = 0.0005;
  if (c.ic == InitialKind::Gaussian && c.dim == 2) {
    default_h = 0.25;
    default_h_list = {1.0, 0.5, 0.25};
    default_k = 0.001;
  } else if (c.ic == InitialKind::Gaussian && c.dim == 3) {
    default_h = 0.5;
    default_h_list = {1.0, 0.5};
    default_k = 0.0005;
  }

  c.ic_path = r.text("ic.path").value_or("");
  if (c.ic == InitialKind::File && c.ic_path.empty()) {
    throw ConfigError("ic.path", "required when problem.ic = file");
  }
  c.soliton_omega = r.real("soliton.omega", -1.0);
  c.soliton_c = r.real("soliton.c", 0.5);
  c.ic_value = r.real("ic.value", 1.0);

  c.params.a = r.real("nlse.a", 1.0);
  if (!(c.params.a > 0.0)) throw ConfigError("nlse.a", "must be > 0");
  c.params.s = r.real("nlse.s", default_s);

  const std::string pot = lower(r.text("nlse.potential").value_or(default_potential));
  if (pot == "none") {
    c.params.potential = Potential::none();
  } else if (pot == "harmonic") {
    std::optional<double> coeff;
    if (r.has("potential.coefficient")) coeff = r.real("potential.coefficient", 0.0);
    c.params.potential = Potential::harmonic(coeff);
  } else if (pot == "file") {
    c.params.potential.kind = Potential::Kind::Tabulated;
    c.potential_path = r.text("potential.path").value_or("");
    if (c.potential_path.empty()) {
      throw ConfigError("potential.path", "required when nlse.potential = file");
    }
  } else {
    throw ConfigError("nlse.potential", "expected none, harmonic or file");
  }

  if (const auto t = r.text("scheme")) {
    const auto s = parse_scheme(*t);
    if (!s) throw ConfigError("scheme", "expected cd2, 2shoc or 2shoc-multi");
    c.scheme = *s;
  }
  if (c.scheme == Scheme::Wide4) {
    throw ConfigError("scheme", "wide4 has no boundary treatment and cannot be time-integrated");
  }
  c.bc = default_bc;
  if (const auto t = r.text("bc")) {
    const auto b = parse_boundary_kind(*t);
    if (!b) throw ConfigError("bc", "expected dirichlet or msd");
    c.bc = *b;
  }
  if (c.scheme == Scheme::ShocMulti && c.dim < 2) {
    throw ConfigError("scheme", "2shoc-multi needs dim >= 2");
  }
  if (c.scheme == Scheme::ShocMulti && c.bc == BoundaryKind::Msd) {
    throw ConfigError("bc", "msd is not available with 2shoc-multi");
  }

  c.h = r.real("grid.h", default_h);
  if (!(c.h > 0.0)) throw ConfigError("grid.h", "must be > 0");
  c.h_list = r.has("grid.h_list") ? r.reals("grid.h_list") : default_h_list;
  for (std::size_t i = 0; i < c.h_list.size(); ++i) {
    if (!(c.h_list[i] > 0.0)) throw ConfigError("grid.h_list", "entries must be > 0");
    if (i > 0 && !(c.h_list[i] < c.h_list[i - 1])) {
      throw ConfigError("grid.h_list", "entries must be strictly decreasing");
    }
  }

  const std::string k_text = lower(r.text("time.k").value_or(""));
  if (k_text == "auto") {
    c.k.reset();
  } else if (k_text.empty()) {
    if (analytic) c.k = default_k;
    else c.k.reset();
  } else {
    c.k = r.real("time.k", default_k);
    if (!(*c.k > 0.0)) throw ConfigError("time.k", "must be > 0 or 'auto'");
  }
  if (r.has("time.safety")) {
    c.safety = r.real("time.safety", 0.0);
    if (!(*c.safety > 0.0)) throw ConfigError("time.safety", "must be > 0");
  }
  c.t_end = r.real("time.t_end", 10.0);
  if (!(c.t_end > 0.0)) throw ConfigError("time.t_end", "must be > 0");
  c.snapshots = int(r.integer("time.snapshots", 100));
  if (c.snapshots < 1) throw ConfigError("time.snapshots", "must be >= 1");

  const std::string mode =
      lower(r.text("domain.mode").value_or(analytic ? "auto" : "explicit"));
  if (mode == "auto") {
    c.auto_domain = true;
    if (!analytic) {
      throw ConfigError("domain.mode", "auto domain needs an analytic initial condition");
    }
  } else if (mode == "explicit") {
    c.auto_domain = false;
    // A constant field defaults to the unit box.
    const bool unit_box = c.ic == InitialKind::Constant && !r.has("domain.min") &&
                          !r.has("domain.max");
    const auto mins = unit_box ? std::vector<double>(std::size_t(c.dim), 0.0) : r.reals("domain.min");
    const auto maxs = unit_box ? std::vector<double>(std::size_t(c.dim), 1.0) : r.reals("domain.max");
    if (mins.size() != std::size_t(c.dim)) {
      throw ConfigError("domain.min", "needs one value per axis");
    }
    if (maxs.size() != std::size_t(c.dim)) {
      throw ConfigError("domain.max", "needs one value per axis");
    }
    for (int a = 0; a < c.dim; ++a) {
      if (!(maxs[a] > mins[a])) throw ConfigError("domain.max", "must exceed domain.min");
      c.domain.push_back({mins[a], maxs[a]});
    }
  } else {
    throw ConfigError("domain.mode", "expected auto or explicit");
  }
  c.epsilon = r.real("domain.epsilon", kMachineEpsilon);
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) {
    throw ConfigError("domain.epsilon", "must be in (0, 1)");
  }
  const std::string snap = lower(r.text("domain.snap").value_or("nearest"));
  if (snap == "nearest") c.snap = SnapMode::Nearest;
  else if (snap == "outward") c.snap = SnapMode::Outward;
  else throw ConfigError("domain.snap", "expected nearest or outward");

  c.out_dir = r.text("output.dir").value_or("out");
  c.write_snapshots = r.boolean("output.write_snapshots", true);
  const long seed = r.integer("run.seed", 1);
  if (seed < 0) throw ConfigError("run.seed", "must be >= 0");
  c.seed = std::uint64_t(seed);
  c.threads = int(r.integer("run.threads", 1));
  if (c.threads < 1) throw ConfigError("run.threads", "must be >= 1");
  c.recheck_every = int(r.integer("stability.recheck_every", 0));
  if (c.recheck_every < 0) throw ConfigError("stability.recheck_every", "must be >= 0");
  c.blowup_factor = r.real("stability.blowup_factor", 10.0);
  if (!(c.blowup_factor > 1.0)) throw ConfigError("stability.blowup_factor", "must be > 1");
  const std::string divisor = lower(r.text("error.divisor").value_or("sqrt_n"));
  if (divisor == "sqrt_n") c.error_divisor = ErrorDivisor::SqrtN;
  else if (divisor == "n") c.error_divisor = ErrorDivisor::N;
  else throw ConfigError("error.divisor", "expected sqrt_n or n");
  c.equiv_trials = int(r.integer("equiv.trials", 100));
  if (c.equiv_trials < 1) throw ConfigError("equiv.trials", "must be >= 1");
  c.bench_steps = int(r.integer("bench.steps", 20));
  if (c.bench_steps < 1) throw ConfigError("bench.steps", "must be >= 1");

  // Cross-checks against the selected initial condition.
  if (c.ic == InitialKind::DarkSoliton) {
    if (c.dim != 1) throw ConfigError("problem.dim", "the dark soliton is one-dimensional");
    if (!(c.params.s < 0.0)) throw ConfigError("nlse.s", "the dark soliton needs s < 0");
    if (!(c.soliton_omega / c.params.s > 0.0)) {
      throw ConfigError("soliton.omega", "omega / s must be > 0");
    }
    if (c.params.potential.kind != Potential::Kind::None) {
      throw ConfigError("nlse.potential", "the dark soliton needs V = 0");
    }
  } else if (c.ic == InitialKind::Gaussian) {
    if (c.dim < 2) throw ConfigError("problem.dim", "the gaussian packet needs dim 2 or 3");
    if (c.params.s != 0.0) throw ConfigError("nlse.s", "the gaussian packet needs s = 0");
    const Potential& v = c.params.potential;
    if (v.kind != Potential::Kind::Harmonic ||
        (v.coefficient && std::abs(*v.coefficient * c.params.a - 1.0) > 1e-12)) {
      throw ConfigError("nlse.potential", "the gaussian packet needs V = |r|^2 / a");
    }
  }
  return c;
}

std::optional<ExactSolution> RunConfig::exact() const {
  switch (ic) {
    case InitialKind::DarkSoliton:
      return ExactSolution{DarkSoliton{soliton_omega, soliton_c, params.a, params.s}};
    case InitialKind::Gaussian:
      return ExactSolution{GaussianPacket{dim, params.a}};
    case InitialKind::Constant:
    case InitialKind::File:
      return std::nullopt;
  }
  return std::nullopt;
}

ConfigMap RunConfig::to_map() const {
  ConfigMap m;
  m["problem.dim"] = std::to_string(dim);
  m["problem.ic"] = ic == InitialKind::DarkSoliton ? "dark_soliton"
                    : ic == InitialKind::Gaussian  ? "gaussian"
                    : ic == InitialKind::Constant  ? "constant"
                                                   : "file";
  if (ic == InitialKind::File) m["ic.path"] = ic_path;
  if (ic == InitialKind::Constant) m["ic.value"] = format_real(ic_value);
  if (ic == InitialKind::DarkSoliton) {
    m["soliton.omega"] = format_real(soliton_omega);
    m["soliton.c"] = format_real(soliton_c);
  }
  m["nlse.a"] = format_real(params.a);
  m["nlse.s"] = format_real(params.s);
  switch (params.potential.kind) {
    case Potential::Kind::None:
      m["nlse.potential"] = "none";
      break;
    case Potential::Kind::Harmonic:
      m["nlse.potential"] = "harmonic";
      m["potential.coefficient"] = format_real(params.potential.coefficient.value_or(1.0 / params.a));
      break;
    case Potential::Kind::Tabulated:
      m["nlse.potential"] = "file";
      m["potential.path"] = potential_path;
      break;
  }
  m["scheme"] = std::string(to_string(scheme));
  m["bc"] = std::string(to_string(bc));
  m["grid.h"] = format_real(h);
  m["grid.h_list"] = format_list(h_list);
  m["time.k"] = k ? format_real(*k) : "auto";
  if (safety) m["time.safety"] = format_real(*safety);
  m["time.t_end"] = format_real(t_end);
  m["time.snapshots"] = std::to_string(snapshots);
  m["domain.mode"] = auto_domain ? "auto" : "explicit";
  if (!auto_domain) {
    std::vector<double> mins, maxs;
    for (const AxisExtent& e : domain) {
      mins.push_back(e.min);
      maxs.push_back(e.max);
    }
    m["domain.min"] = format_list(mins);
    m["domain.max"] = format_list(maxs);
  }
  m["domain.epsilon"] = format_real(epsilon);
  m["domain.snap"] = snap == SnapMode::Nearest ? "nearest" : "outward";
  m["output.dir"] = out_dir;
  m["output.write_snapshots"] = write_snapshots ? "true" : "false";
  m["run.seed"] = std::to_string(seed);
  m["run.threads"] = std::to_string(threads);
  m["stability.recheck_every"] = std::to_string(recheck_every);
  m["stability.blowup_factor"] = format_real(blowup_factor);
  m["error.divisor"] = error_divisor == ErrorDivisor::SqrtN ? "sqrt_n" : "n";
  m["equiv.trials"] = std::to_string(equiv_trials);
  m["bench.steps"] = std::to_string(bench_steps);
  return m;
}

}  // namespace shoc
