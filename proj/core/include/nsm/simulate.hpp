// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nsm/mhd_system.hpp"

namespace nsm {

struct StepDiagnostics {
  std::size_t step = 0;
  double time = 0.0;
  EnergyReport energy;
};

/// Uniform-time run. states holds every store_stride-th state (always including
/// the first and the last); diagnostics cover every step.
struct Trajectory {
  std::vector<MhdState> states;
  std::vector<StepDiagnostics> diagnostics;
  std::vector<std::string> warnings;
  double dt = 0.0;
  std::size_t steps = 0;

  std::vector<double> times() const;
};

struct SimulationOptions {
  Scheme scheme = Scheme::exp_trapezoid;
  MhdParams params;
  /// Drop the nonlinearity (pure linear propagation).
  bool linear = false;
  std::size_t store_stride = 1;
  /// Called after every step (including step 0) with the current state.
  std::function<void(const MhdState&, const StepDiagnostics&)> on_step;
};

/// Number of steps T/dt; throws InvalidArgument unless T/dt is an integer
/// (to relative 1e-9) and 0 < dt <= T.
std::size_t step_count(double T, double dt);

/// Integrate from `initial` over [t0, t0 + T] with N = T/dt steps.
/// Throws NumericalBlowup carrying the failing step.
Trajectory simulate(const MhdState& initial, double T, double dt, const SimulationOptions& options = {});

/// Relative energy-identity defect
/// |energy(T) - energy(0) + int_0^T (||grad v||^2 + ||j||^2 / sigma)| / energy(0),
/// with composite Simpson quadrature over the per-step diagnostics.
double energy_identity_residual(const Trajectory& traj, const MhdParams& params = {});

}  // namespace nsm
