// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/simulate.hpp"

#include <cmath>
#include <sstream>

#include "nsm/error.hpp"
#include "nsm/reduce.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm {

std::vector<double> Trajectory::times() const {
  std::vector<double> t;
  t.reserve(states.size());
  for (const auto& s : states) t.push_back(s.time);
  return t;
}

std::size_t step_count(double T, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive");
  if (!(T >= dt) || !std::isfinite(T)) throw InvalidArgument("T must satisfy T >= dt");
  const double ratio = T / dt;
  const double steps = std::round(ratio);
  if (std::abs(ratio - steps) > 1e-9 * steps) throw InvalidArgument("T is not an integer multiple of dt");
  return static_cast<std::size_t>(steps);
}

Trajectory simulate(const MhdState& initial, double T, double dt, const SimulationOptions& options) {
  const std::size_t steps = step_count(T, dt);
  if (options.store_stride == 0) throw InvalidArgument("store stride must be >= 1");
  const PropagatorTable table(initial.grid_ptr(), dt);
  const Nonlinearity full = make_nonlinearity(options.params);
  const Nonlinearity zero = [](const MhdState& s) { return MhdState(s.grid_ptr()); };
  const Nonlinearity& n = options.linear ? zero : full;

  Trajectory traj;
  traj.dt = dt;
  traj.steps = steps;
  traj.diagnostics.reserve(steps + 1);

  const double t0 = initial.time;
  MhdState state = initial;
  bool warned = false;
  for (std::size_t s = 0;; ++s) {
    if (s > 0) {
      state = duhamel_step(state, n, table, options.scheme, s);
      state.time = t0 + static_cast<double>(s) * dt;
    }
    StepDiagnostics diag{s, state.time, energy_report(state, options.params)};
    if (!std::isfinite(diag.energy.energy)) throw NumericalBlowup(s, "non-finite energy");
    traj.diagnostics.push_back(diag);
    if (!warned && dt * linf_norm(state.v) > state.grid().spacing()) {
      std::ostringstream os;
      os << "step " << s << ": dt * max|v| exceeds the grid spacing";
      traj.warnings.push_back(os.str());
      warned = true;
    }
    if (s % options.store_stride == 0 || s == steps) traj.states.push_back(state);
    if (options.on_step) options.on_step(state, diag);
    if (s == steps) break;
  }
  return traj;
}

double energy_identity_residual(const Trajectory& traj, const MhdParams& params) {
  const auto& d = traj.diagnostics;
  if (d.size() < 2) throw InvalidArgument("energy identity needs at least one step");
  auto rate = [&](const StepDiagnostics& x) {
    return params.nu * x.energy.grad_v_sq + x.energy.j_sq / params.sigma;
  };
  // Composite Simpson on pairs of steps, trapezoid on a leftover step.
  std::vector<double> terms;
  std::size_t i = 0;
  for (; i + 2 < d.size(); i += 2) {
    const double h = 0.5 * (d[i + 2].time - d[i].time);
    terms.push_back(h / 3.0 * (rate(d[i]) + 4.0 * rate(d[i + 1]) + rate(d[i + 2])));
  }
  if (i + 1 < d.size()) terms.push_back(0.5 * (d[i + 1].time - d[i].time) * (rate(d[i]) + rate(d[i + 1])));
  const double e0 = d.front().energy.energy;
  if (e0 == 0.0) return 0.0;
  return std::abs(d.back().energy.energy - e0 + pairwise_sum(terms)) / e0;
}

}  // namespace nsm
