// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "nsm/mhd_system.hpp"
#include "nsm/znorm.hpp"

namespace nsm {

struct PicardOptions {
  std::size_t iterations = 8;
  MhdParams params;
  /// Keep every iterate (memory: iterations x (N+1) states).
  bool keep_iterates = false;
  /// Stop once ||Gamma^(m+1) - Gamma^(m)||_Z falls below this multiple of
  /// the free-evolution Z-norm; ratios below that level measure roundoff.
  double stop_relative = 1e-13;
};

struct PicardResult {
  std::vector<MhdState> free_evolution;  // e^{t A} Gamma0 on the time grid
  std::vector<MhdState> perturbation;    // last iterate Gamma^(m)
  std::vector<std::vector<MhdState>> iterates;
  std::vector<double> difference_norms;  // ||Gamma^(m+1) - Gamma^(m)||_Z, m = 0, 1, ...
  std::vector<double> ratios;            // difference_norms[m] / difference_norms[m-1]
  ZNorm free_norm;
  bool converged = false;
  double dt = 0.0;

  /// e^{t A} Gamma0 + Gamma^(m) at sample n.
  MhdState solution(std::size_t n) const;
  double max_ratio() const;
};

/// Iterates Gamma^(m+1)(t) = int_0^t e^{(t-s)A} N(e^{sA} Gamma0 + Gamma^(m)(s)) ds
/// from Gamma^(0) = 0 on the grid t_n = n dt, trapezoidal in s with exact
/// propagators. Needs options.iterations >= 2.
PicardResult picard_iterate(const MhdState& initial, double T, double dt, const PicardOptions& options = {});

}  // namespace nsm
