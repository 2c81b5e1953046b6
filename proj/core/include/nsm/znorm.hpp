// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "nsm/mhd_state.hpp"
#include "nsm/norms.hpp"

namespace nsm {

/// Components of the solution-space norm (alpha = 1 in 2D, 0 in 3D):
///   Z^u = ||u||_{L^2 H^{d/2}} + ||u||_{L^2 L^inf} + ||u||_{Lt^inf H^{d/2-1}}
///   Z^E = ||E||_{Lt^inf H^{d/2-1}_alpha} + ||E||_{L^2 H^{d/2-1}_alpha}
///   Z^B = ||B||_{Lt^inf H^{d/2-1}_alpha} + ||B||_{L^2 H^{d/2,d/2-1}_alpha}
struct ZNorm {
  double u = 0.0;
  double E = 0.0;
  double B = 0.0;
  double total = 0.0;
};

/// Logarithmic weight exponent for the grid dimension.
inline double z_alpha(int dim) { return dim == 2 ? 1.0 : 0.0; }

/// Z-norm of a time-sampled trajectory; times are read from the states and
/// must be strictly increasing (at least two samples).
ZNorm z_norm(std::span<const MhdState> states, const DyadicPartition& part);

/// Spatial part used by the initial-data split:
/// ||u||_{H^{d/2-1}} + ||E||_{H^{d/2-1}_alpha} + ||B||_{H^{d/2-1}_alpha}.
double initial_data_norm(const MhdState& state, const DyadicPartition& part);

}  // namespace nsm
