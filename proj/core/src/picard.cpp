// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/picard.hpp"

#include <algorithm>

#include "nsm/error.hpp"
#include "nsm/simulate.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm {

MhdState PicardResult::solution(std::size_t n) const {
  MhdState s = free_evolution.at(n);
  s += perturbation.at(n);
  return s;
}

double PicardResult::max_ratio() const {
  double m = 0.0;
  for (double r : ratios) m = std::max(m, r);
  return m;
}

PicardResult picard_iterate(const MhdState& initial, double T, double dt, const PicardOptions& options) {
  if (options.iterations < 2) throw InvalidArgument("Picard iteration needs at least two iterations");
  const std::size_t steps = step_count(T, dt);
  const GridPtr& grid = initial.grid_ptr();
  const PropagatorTable table(grid, dt);
  const DyadicPartition part(grid);

  PicardResult result;
  result.dt = dt;
  result.free_evolution.reserve(steps + 1);
  result.free_evolution.push_back(initial);
  for (std::size_t n = 1; n <= steps; ++n) {
    result.free_evolution.push_back(table.apply(result.free_evolution.back()));
    result.free_evolution.back().time = initial.time + static_cast<double>(n) * dt;
  }
  result.free_norm = z_norm(result.free_evolution, part);

  auto zero_like = [&](std::size_t n) {
    MhdState s(grid);
    s.time = result.free_evolution[n].time;
    return s;
  };
  std::vector<MhdState> current;
  for (std::size_t n = 0; n <= steps; ++n) current.push_back(zero_like(n));

  for (std::size_t m = 0; m < options.iterations; ++m) {
    std::vector<MhdState> next;
    next.reserve(steps + 1);
    MhdState forcing_prev(grid);
    for (std::size_t n = 0; n <= steps; ++n) {
      MhdState total = result.free_evolution[n];
      total += current[n];
      MhdState forcing = nonlinearity(total, options.params);
      forcing.v.remove_mean();
      if (!forcing.all_finite()) throw NumericalBlowup(n, "non-finite nonlinearity in Picard iterate");
      if (n == 0) {
        next.push_back(zero_like(0));
      } else {
        MhdState acc = next.back();
        acc.axpy(0.5 * dt, forcing_prev);
        MhdState advanced = table.apply_increment(acc);
        advanced.axpy(0.5 * dt, forcing);
        advanced.time = result.free_evolution[n].time;
        next.push_back(std::move(advanced));
      }
      forcing_prev = std::move(forcing);
    }

    std::vector<MhdState> diff;
    diff.reserve(steps + 1);
    for (std::size_t n = 0; n <= steps; ++n) {
      MhdState d = next[n];
      d -= current[n];
      diff.push_back(std::move(d));
    }
    const double dn = z_norm(diff, part).total;
    result.difference_norms.push_back(dn);
    if (m >= 1 && result.difference_norms[m - 1] > 0.0) {
      result.ratios.push_back(dn / result.difference_norms[m - 1]);
    }
    if (options.keep_iterates) result.iterates.push_back(next);
    current = std::move(next);
    if (dn <= options.stop_relative * result.free_norm.total) {
      result.converged = true;
      break;
    }
  }
  result.perturbation = std::move(current);
  return result;
}

}  // namespace nsm
