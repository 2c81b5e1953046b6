// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "nsm/mhd_state.hpp"
#include "nsm/znorm.hpp"

namespace nsm {

struct SplitResult {
  MhdState regular;  // S_Q Gamma0
  MhdState small;    // (I - S_Q) Gamma0
  int Q = 0;
  double small_norm = 0.0;
  /// False when no cutoff reached the target; Q then minimizes the small part.
  bool achieved = false;
  /// ||(I - S_Q) Gamma0|| for Q = q_min .. q_max + 1.
  std::vector<double> sweep;
};

/// Fourier cut-off Gamma0 = S_Q Gamma0 + (I - S_Q) Gamma0 with the smallest Q
/// such that the small part has initial_data_norm <= delta_target.
SplitResult split_initial_data(const MhdState& initial, double delta_target, const DyadicPartition& part);

}  // namespace nsm
