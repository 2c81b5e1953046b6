// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/split.hpp"

#include <cmath>

#include "nsm/error.hpp"

namespace nsm {

namespace {

MhdState low_pass_state(const MhdState& s, const DyadicPartition& part, int q) {
  MhdState out(low_pass(s.v, part, q), low_pass(s.E, part, q), low_pass(s.B, part, q), s.time);
  return out;
}

}  // namespace

SplitResult split_initial_data(const MhdState& initial, double delta_target, const DyadicPartition& part) {
  if (!(delta_target > 0.0) || !std::isfinite(delta_target)) throw InvalidArgument("delta must be positive");
  SplitResult best{MhdState(initial.grid_ptr()), MhdState(initial.grid_ptr()), 0, 0.0, false, {}};
  bool have_best = false;
  for (int q = part.q_min(); q <= part.q_max() + 1; ++q) {
    MhdState regular = low_pass_state(initial, part, q);
    MhdState small = initial;
    small -= regular;
    const double norm = initial_data_norm(small, part);
    best.sweep.push_back(norm);
    if (best.achieved) continue;
    if (norm <= delta_target || !have_best || norm < best.small_norm) {
      best.regular = std::move(regular);
      best.small = std::move(small);
      best.Q = q;
      best.small_norm = norm;
      best.achieved = norm <= delta_target;
      have_best = true;
    }
  }
  return best;
}

}  // namespace nsm
