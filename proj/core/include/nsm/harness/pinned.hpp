// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace nsm::harness {

/// Regression bound for a report id at the default verify settings (seed 0,
/// 20 samples, slope 2, n = 64 in 2D and 32 in 3D): 1.5 x the first measured
/// max ratio. Infinity for ids without a pinned value.
double pinned_bound(const std::string& id, int dim);

}  // namespace nsm::harness
