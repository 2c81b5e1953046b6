// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>

namespace nsm {

/// Pairwise (cascade) summation. The summation tree depends only on the
/// length, so results are bit-reproducible.
inline double pairwise_sum(std::span<const double> x) {
  constexpr std::size_t kLeaf = 64;
  if (x.size() <= kLeaf) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

}  // namespace nsm
