// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsm/mhd_state.hpp"
#include "nsm/propagators.hpp"

namespace nsm::cli {

/// Initial data for one of v, E, B.
struct FieldInit {
  std::string kind = "zero";  // zero, taylor-green, random, shell, file
  double amplitude = 1.0;
  std::optional<std::uint64_t> seed;
  double slope = 2.0;
  int shell = 0;
  std::string file;
};

struct RunConfig {
  int dim = 2;
  int n = 64;
  double box_length = 0.0;  // 2 pi when not given

  FieldInit velocity;
  FieldInit electric;
  FieldInit magnetic;

  double T = 0.0;
  double dt = 0.0;
  Scheme scheme = Scheme::exp_trapezoid;
  std::size_t stride = 10;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  double nu = 1.0;
  double sigma = 1.0;
  std::vector<std::string> norms;

  std::vector<double> eps{1e-3, 1e-2, 1e-1, 1.0};
  int iterations = 8;

  double delta = 0.1;

  std::vector<std::string> estimates;
  int samples = 20;
  double slope = 2.0;
  std::vector<double> horizons{1.0, 10.0, 100.0};
  std::vector<int> q_sweep{2, 4, 6, 8, 10, 12};
};

struct ConfigError {
  int line = 0;  // 1-based; 0 when the error has no location
  std::string message;

  std::string str() const;
};

struct ParseResult {
  RunConfig config;
  std::vector<ConfigError> errors;

  bool ok() const { return errors.empty(); }
};

/// Parse YAML text with flat sections (grid, velocity, electric, magnetic,
/// run, picard, split, verify) holding scalars and lists. Every problem is
/// collected rather than stopping at the first.
ParseResult parse_config(const std::string& text);

/// Names accepted in run.norms: <v|E|B>.<l2|linf|h1|crit>, plus div.
bool valid_norm_name(const std::string& name);

/// Builds the initial state from the presets; throws on unreadable files.
MhdState initial_state(const RunConfig& config);

}  // namespace nsm::cli
