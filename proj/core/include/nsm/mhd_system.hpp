// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "nsm/mhd_state.hpp"
#include "nsm/propagators.hpp"

namespace nsm {

/// Viscosity and conductivity. The linear propagators are built for
/// nu = sigma = 1; other values enter the nonlinearity as explicit
/// corrections (nu - 1) Delta v and -(sigma - 1) E.
struct MhdParams {
  double nu = 1.0;
  double sigma = 1.0;
  /// Largest tolerated ||div v|| / ||v|| before a state is rejected.
  double divergence_tolerance = 1e-8;
};

/// j = sigma (E + v x B), dealiased.
SpectralField ohm_current(const MhdState& state, const MhdParams& params = {});

/// Lorentz force j x B = sigma (E x B + (v x B) x B), dealiased.
SpectralField lorentz_force(const MhdState& state, const MhdParams& params = {});

enum class MomentumForm { advection, divergence };

/// -(v . grad) v in advection form or -div(v (x) v) in divergence form.
SpectralField momentum_transport(const SpectralField& v, MomentumForm form);

/// N(Gamma) = (P[-(v . grad) v + j x B], -sigma v x B, 0), with the nu/sigma
/// corrections. Throws InconsistentState when div v is too large.
MhdState nonlinearity(const MhdState& state, const MhdParams& params = {},
                      MomentumForm form = MomentumForm::advection);

/// Callable wrapper suitable for duhamel_step.
Nonlinearity make_nonlinearity(MhdParams params = {}, MomentumForm form = MomentumForm::advection);

struct EnergyReport {
  double energy = 0.0;     // (||v||^2 + ||E||^2 + ||B||^2) / 2
  double grad_v_sq = 0.0;  // ||grad v||^2
  double j_sq = 0.0;       // ||j||^2
};

EnergyReport energy_report(const MhdState& state, const MhdParams& params = {});

/// Pressure recovered from the gradient part of the momentum forcing
/// (zero mean).
SpectralField pressure(const MhdState& state, const MhdParams& params = {});

}  // namespace nsm
