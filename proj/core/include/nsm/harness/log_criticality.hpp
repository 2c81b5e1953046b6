// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace nsm::harness {

/// One shell of the 2D criticality sweep: E = f_q e1, B = f_q e2 on R^2,
/// static on [0, 1], with f_q the L^2-normalized Delta_q kernel.
struct CriticalityRow {
  int q = 0;
  double lhs = 0.0;         // est4-2D sum-space norm of E x B
  double rhs_plain = 0.0;   // ||E||_{L^2_T L^2} (||B||_{Lt^inf_T L^2} + ||B||_{L^2_T H^{1,0}})
  double rhs_log = 0.0;     // the same with L^2_log in place of L^2
  double ratio_plain = 0.0;
  double ratio_log = 0.0;
};

struct CriticalityResult {
  std::vector<CriticalityRow> rows;
  /// Least-squares exponent gamma in ratio_plain ~ q^gamma.
  double growth_exponent = 0.0;
  /// max / min of ratio_log over the sweep.
  double log_spread = 0.0;
  /// ratio_plain at the last q over ratio_plain at the first.
  double plain_growth = 0.0;
};

/// Evaluated with the radial R^2 engine, which is exact in q up to quadrature
/// error: every quantity is a dilation of the q = 0 configuration. Each q
/// must be >= 1.
CriticalityResult log_criticality_experiment(const std::vector<int>& q_sweep);

}  // namespace nsm::harness
