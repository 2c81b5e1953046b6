// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>

#include "nsm/error.hpp"
#include "nsm/harness/ensemble.hpp"
#include "nsm/harness/product_laws.hpp"
#include "nsm/simulate.hpp"
#include "nsm/snapshot.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm::cli {

namespace {

using Handler = std::function<void(const YAML::Node&, RunConfig&)>;

struct Bad {
  std::string message;
};

int line_of(const YAML::Node& n) { return n.Mark().is_null() ? 0 : n.Mark().line + 1; }

std::string scalar(const YAML::Node& n) {
  if (!n.IsScalar()) throw Bad{"expected a scalar"};
  return n.Scalar();
}

double real(const YAML::Node& n) {
  const std::string s = scalar(n);
  // Allow multiples of pi, e.g. "2pi".
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    const std::string head = s.substr(0, s.size() - 2);
    if (head.empty()) return std::numbers::pi;
    try {
      std::size_t used = 0;
      const double v = std::stod(head, &used);
      if (used == head.size()) return v * std::numbers::pi;
    } catch (const std::exception&) {
    }
    throw Bad{"expected a number, got '" + s + "'"};
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw Bad{"expected a number, got '" + s + "'"};
    return v;
  } catch (const std::logic_error&) {
    throw Bad{"expected a number, got '" + s + "'"};
  }
}

long long integer(const YAML::Node& n) {
  const std::string s = scalar(n);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw Bad{"expected an integer, got '" + s + "'"};
    return v;
  } catch (const std::logic_error&) {
    throw Bad{"expected an integer, got '" + s + "'"};
  }
}

std::uint64_t unsigned_integer(const YAML::Node& n) {
  const std::string s = scalar(n);
  if (s.empty() || s[0] == '-') throw Bad{"expected a non-negative integer, got '" + s + "'"};
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw Bad{"expected a non-negative integer, got '" + s + "'"};
    return v;
  } catch (const std::logic_error&) {
    throw Bad{"expected a non-negative integer, got '" + s + "'"};
  }
}

template <class T, class F>
std::vector<T> list(const YAML::Node& n, F&& item) {
  std::vector<T> out;
  if (n.IsScalar()) {
    out.push_back(item(n));
    return out;
  }
  if (!n.IsSequence()) throw Bad{"expected a list"};
  for (const auto& x : n) out.push_back(item(x));
  if (out.empty()) throw Bad{"list must not be empty"};
  return out;
}

double positive(const YAML::Node& n) {
  const double v = real(n);
  if (!(v > 0.0)) throw Bad{"must be > 0"};
  return v;
}

double non_negative(const YAML::Node& n) {
  const double v = real(n);
  if (!(v >= 0.0)) throw Bad{"must be >= 0"};
  return v;
}

void field_handlers(std::map<std::string, Handler>& h, FieldInit RunConfig::*field) {
  h["kind"] = [field](const YAML::Node& n, RunConfig& c) {
    static const std::set<std::string> kinds{"zero", "taylor-green", "random", "shell", "file"};
    const std::string k = scalar(n);
    if (!kinds.count(k)) throw Bad{"unknown kind '" + k + "' (zero, taylor-green, random, shell, file)"};
    (c.*field).kind = k;
  };
  h["amplitude"] = [field](const YAML::Node& n, RunConfig& c) { (c.*field).amplitude = non_negative(n); };
  h["seed"] = [field](const YAML::Node& n, RunConfig& c) { (c.*field).seed = unsigned_integer(n); };
  h["slope"] = [field](const YAML::Node& n, RunConfig& c) { (c.*field).slope = non_negative(n); };
  h["shell"] = [field](const YAML::Node& n, RunConfig& c) {
    const long long q = integer(n);
    if (q < -30 || q > 30) throw Bad{"must lie in [-30, 30]"};
    (c.*field).shell = static_cast<int>(q);
  };
  h["file"] = [field](const YAML::Node& n, RunConfig& c) { (c.*field).file = scalar(n); };
}

const std::map<std::string, std::map<std::string, Handler>>& schema() {
  static const auto table = [] {
    std::map<std::string, std::map<std::string, Handler>> s;
    auto& grid = s["grid"];
    grid["dim"] = [](const YAML::Node& n, RunConfig& c) {
      const long long d = integer(n);
      if (d != 2 && d != 3) throw Bad{"must be 2 or 3"};
      c.dim = static_cast<int>(d);
    };
    grid["n"] = [](const YAML::Node& n, RunConfig& c) {
      const long long v = integer(n);
      if (v < 8 || v > 4096 || (v & (v - 1)) != 0) throw Bad{"must be a power of two in [8, 4096]"};
      c.n = static_cast<int>(v);
    };
    grid["box_length"] = [](const YAML::Node& n, RunConfig& c) { c.box_length = positive(n); };
    field_handlers(s["velocity"], &RunConfig::velocity);
    field_handlers(s["electric"], &RunConfig::electric);
    field_handlers(s["magnetic"], &RunConfig::magnetic);
    auto& run = s["run"];
    run["T"] = [](const YAML::Node& n, RunConfig& c) { c.T = positive(n); };
    run["dt"] = [](const YAML::Node& n, RunConfig& c) { c.dt = positive(n); };
    run["scheme"] = [](const YAML::Node& n, RunConfig& c) {
      try {
        c.scheme = parse_scheme(scalar(n));
      } catch (const InvalidArgument& e) {
        throw Bad{std::string(e.what()) + " (exp-euler, exp-trapezoid)"};
      }
    };
    run["stride"] = [](const YAML::Node& n, RunConfig& c) {
      const long long v = integer(n);
      if (v < 1) throw Bad{"must be >= 1"};
      c.stride = static_cast<std::size_t>(v);
    };
    run["out_dir"] = [](const YAML::Node& n, RunConfig& c) { c.out_dir = scalar(n); };
    run["seed"] = [](const YAML::Node& n, RunConfig& c) { c.seed = unsigned_integer(n); };
    run["nu"] = [](const YAML::Node& n, RunConfig& c) { c.nu = positive(n); };
    run["sigma"] = [](const YAML::Node& n, RunConfig& c) { c.sigma = positive(n); };
    run["norms"] = [](const YAML::Node& n, RunConfig& c) {
      c.norms = list<std::string>(n, [](const YAML::Node& x) {
        const std::string s = scalar(x);
        if (!valid_norm_name(s)) throw Bad{"unknown norm '" + s + "'"};
        return s;
      });
    };
    auto& picard = s["picard"];
    picard["eps"] = [](const YAML::Node& n, RunConfig& c) { c.eps = list<double>(n, positive); };
    picard["iterations"] = [](const YAML::Node& n, RunConfig& c) {
      const long long v = integer(n);
      if (v < 2 || v > 100) throw Bad{"must lie in [2, 100]"};
      c.iterations = static_cast<int>(v);
    };
    s["split"]["delta"] = [](const YAML::Node& n, RunConfig& c) { c.delta = positive(n); };
    auto& verify = s["verify"];
    verify["estimates"] = [](const YAML::Node& n, RunConfig& c) {
      c.estimates = list<std::string>(n, [](const YAML::Node& x) {
        static const std::set<std::string> other{"bernstein", "parabolic", "l2linf", "caloric", "maxwell",
                                                 "criticality"};
        const std::string s = scalar(x);
        if (other.count(s)) return s;
        try {
          harness::parse_product_law(s);
        } catch (const InvalidArgument& e) {
          throw Bad{e.what()};
        }
        return s;
      });
    };
    verify["samples"] = [](const YAML::Node& n, RunConfig& c) {
      const long long v = integer(n);
      if (v < 1 || v > 10000) throw Bad{"must lie in [1, 10000]"};
      c.samples = static_cast<int>(v);
    };
    verify["slope"] = [](const YAML::Node& n, RunConfig& c) { c.slope = non_negative(n); };
    verify["horizons"] = [](const YAML::Node& n, RunConfig& c) { c.horizons = list<double>(n, positive); };
    verify["q_sweep"] = [](const YAML::Node& n, RunConfig& c) {
      c.q_sweep = list<int>(n, [](const YAML::Node& x) {
        const long long q = integer(x);
        if (q < 1 || q > 20) throw Bad{"shell must lie in [1, 20]"};
        return static_cast<int>(q);
      });
    };
    return s;
  }();
  return table;
}

}  // namespace

std::string ConfigError::str() const {
  return line > 0 ? "line " + std::to_string(line) + ": " + message : message;
}

bool valid_norm_name(const std::string& name) {
  if (name == "div") return true;
  const auto dot = name.find('.');
  if (dot == std::string::npos) return false;
  static const std::set<std::string> fields{"v", "E", "B"}, norms{"l2", "linf", "h1", "crit"};
  return fields.count(name.substr(0, dot)) && norms.count(name.substr(dot + 1));
}

ParseResult parse_config(const std::string& text) {
  ParseResult r;
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    r.errors.push_back({e.mark.line + 1, "syntax error: " + e.msg});
    return r;
  }
  if (root.IsNull()) {
    r.errors.push_back({0, "empty configuration"});
    return r;
  }
  if (!root.IsMap()) {
    r.errors.push_back({line_of(root), "top level must be a mapping of sections"});
    return r;
  }
  std::map<std::string, int> lines;
  std::set<std::string> seen;
  for (const auto& sec : root) {
    const std::string name = sec.first.Scalar();
    const auto it = schema().find(name);
    if (it == schema().end()) {
      r.errors.push_back({line_of(sec.first), "unknown section '" + name + "'"});
      continue;
    }
    if (!sec.second.IsMap()) {
      if (!sec.second.IsNull()) r.errors.push_back({line_of(sec.first), "section '" + name + "' must be a mapping"});
      continue;
    }
    for (const auto& kv : sec.second) {
      const std::string key = kv.first.Scalar();
      const std::string full = name + "." + key;
      const int line = line_of(kv.first);
      const auto h = it->second.find(key);
      if (h == it->second.end()) {
        r.errors.push_back({line, "unknown key '" + full + "'"});
        continue;
      }
      if (!seen.insert(full).second) {
        r.errors.push_back({line, "duplicate key '" + full + "'"});
        continue;
      }
      lines[full] = line;
      try {
        h->second(kv.second, r.config);
      } catch (const Bad& b) {
        r.errors.push_back({line, full + ": " + b.message});
      } catch (const YAML::Exception& e) {
        r.errors.push_back({line, full + ": " + e.msg});
      }
    }
  }

  RunConfig& c = r.config;
  for (const char* key : {"grid.dim", "grid.n"}) {
    if (!seen.count(key)) r.errors.push_back({0, std::string("missing required key '") + key + "'"});
  }
  if (c.box_length == 0.0) c.box_length = 2.0 * std::numbers::pi;
  if (!seen.count("run.T")) c.T = 1.0;
  if (!seen.count("run.dt")) c.dt = 1e-2;
  if (c.T > 0.0 && c.dt > 0.0) {
    try {
      step_count(c.T, c.dt);
    } catch (const InvalidArgument& e) {
      r.errors.push_back({lines.count("run.dt") ? lines["run.dt"] : lines["run.T"], std::string("run.dt: ") + e.what()});
    }
  }
  for (const auto& [name, field] :
       {std::pair{"velocity", &c.velocity}, std::pair{"electric", &c.electric}, std::pair{"magnetic", &c.magnetic}}) {
    const std::string sec = name;
    if (field->kind == "file" && field->file.empty()) {
      r.errors.push_back({lines[sec + ".kind"], sec + ".file: required when kind is file"});
    }
    if (field->kind != "file" && !field->file.empty()) {
      r.errors.push_back({lines[sec + ".file"], sec + ".file: only valid when kind is file"});
    }
    if (field->kind != "shell" && seen.count(sec + ".shell")) {
      r.errors.push_back({lines[sec + ".shell"], sec + ".shell: only valid when kind is shell"});
    }
  }
  if (seen.count("grid.dim")) {
    for (const auto& id : c.estimates) {
      try {
        const int d = harness::product_law_dim(harness::parse_product_law(id));
        if (d != c.dim) {
          r.errors.push_back({lines["verify.estimates"], "verify.estimates: " + id + " needs grid.dim = " +
                                                            std::to_string(d)});
        }
      } catch (const InvalidArgument&) {
      }
    }
  }
  return r;
}

namespace {

SpectralField taylor_green(const GridPtr& g) {
  const double s = 2.0 * std::numbers::pi / g->box_length();
  const bool three = g->dim() == 3;
  return SpectralField::from_function(g, [=](const Vec3& x) {
    const double cz = three ? std::cos(s * x[2]) : 1.0;
    return Vec3{std::sin(s * x[0]) * std::cos(s * x[1]) * cz, -std::cos(s * x[0]) * std::sin(s * x[1]) * cz, 0.0};
  });
}

SpectralField build_field(const FieldInit& f, const GridPtr& g, std::uint64_t seed, bool div_free) {
  SpectralField out(g);
  if (f.kind == "zero") return out;
  if (f.kind == "taylor-green") {
    out = taylor_green(g);
  } else if (f.kind == "random" || f.kind == "shell") {
    harness::FieldEnsembleSpec spec{seed, 1, f.slope, std::nullopt, div_free, g};
    if (f.kind == "shell") spec.shell = f.shell;
    out = harness::ensemble_member(spec, 0);
    // Unit L^2 norm before scaling.
    const double norm = l2_norm(out);
    if (norm == 0.0) throw InvalidArgument("shell " + std::to_string(f.shell) + " holds no resolved modes");
    out *= 1.0 / norm;
  } else if (f.kind == "file") {
    out = read_snapshot(std::filesystem::path(f.file), g).field;
    return out;
  }
  out *= f.amplitude;
  return out;
}

}  // namespace

MhdState initial_state(const RunConfig& config) {
  const GridPtr g = Grid::create(config.dim, config.n, config.box_length);
  MhdState s(g);
  s.v = build_field(config.velocity, g, config.velocity.seed.value_or(config.seed), true);
  s.E = build_field(config.electric, g, config.electric.seed.value_or(config.seed + 1), false);
  s.B = build_field(config.magnetic, g, config.magnetic.seed.value_or(config.seed + 2), true);
  s.make_consistent();
  return s;
}

}  // namespace nsm::cli
