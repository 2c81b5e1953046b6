// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "nsm/spectral_field.hpp"

namespace nsm {

enum class VectorOp {
  gradient,    // of the scalar stored in component 0
  divergence,  // result stored in component 0
  curl,
  laplacian,   // componentwise
};

/// Fourier-multiplier differential operators with the planar convention
/// grad = (d1, d2, 0) in d = 2.
SpectralField apply_diff(const SpectralField& field, VectorOp op);

/// Componentwise partial derivative d/dx_axis; axis < grid dimension.
SpectralField partial(const SpectralField& field, int axis);

/// u -> u - k (k.u) / |k|^2 per mode; the mean is untouched.
SpectralField leray_project(const SpectralField& field);

enum class Combiner {
  cross,      // a x b
  advection,  // (a . grad) b
  scalar,     // componentwise a_i b_i
};

/// Pseudo-spectral product with 2/3-rule dealiasing of inputs and output.
SpectralField pointwise_product(const SpectralField& a, const SpectralField& b, Combiner combiner);

/// Physical-space product of two physical fields (no transforms).
void combine_physical(const PhysicalField& a, const PhysicalField& b, Combiner combiner,
                      PhysicalField& out);

enum class Lp { two, inf };

/// L^2 via Parseval (measure L^d), L^inf as max over grid points of the
/// Euclidean norm of the R^3 value.
double lp_norm(const SpectralField& field, Lp p);
inline double l2_norm(const SpectralField& f) { return lp_norm(f, Lp::two); }
inline double linf_norm(const SpectralField& f) { return lp_norm(f, Lp::inf); }

/// Real L^2 inner product (with measure L^d).
double inner(const SpectralField& a, const SpectralField& b);

/// ||div f||_{L^2}, with the planar divergence in d = 2.
double divergence_norm(const SpectralField& f);

/// ||grad f||_{L^2} (all components).
double gradient_norm(const SpectralField& f);

}  // namespace nsm
