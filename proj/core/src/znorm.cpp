// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/znorm.hpp"

#include "nsm/error.hpp"

namespace nsm {

namespace {

FieldHistory history(std::span<const MhdState> states, int slot) {
  FieldHistory h;
  h.times.reserve(states.size());
  h.samples.reserve(states.size());
  for (const auto& s : states) {
    h.times.push_back(s.time);
    h.samples.push_back(s.slot(slot));
  }
  return h;
}

}  // namespace

ZNorm z_norm(std::span<const MhdState> states, const DyadicPartition& part) {
  if (states.size() < 2) throw InvalidArgument("Z-norm needs at least two time samples");
  const int d = part.grid().dim();
  const double s = 0.5 * d;
  const double alpha = z_alpha(d);

  ZNorm z;
  {
    const FieldHistory u = history(states, 0);
    z.u = spacetime_norm(u, part, NormSpec::sobolev(s).in_time(2.0, false)) +
          spacetime_lebesgue(u, Lp::inf, 2.0) +
          spacetime_norm(u, part, NormSpec::sobolev(s - 1.0).in_time(kInf, true));
  }
  const NormSpec energy_space = NormSpec::hst(s - 1.0, s - 1.0, alpha);
  {
    const FieldHistory e = history(states, 1);
    z.E = spacetime_norm(e, part, energy_space.in_time(kInf, true)) +
          spacetime_norm(e, part, energy_space.in_time(2.0, false));
  }
  {
    const FieldHistory b = history(states, 2);
    z.B = spacetime_norm(b, part, energy_space.in_time(kInf, true)) +
          spacetime_norm(b, part, NormSpec::hst(s, s - 1.0, alpha).in_time(2.0, false));
  }
  z.total = z.u + z.E + z.B;
  return z;
}

double initial_data_norm(const MhdState& state, const DyadicPartition& part) {
  const int d = part.grid().dim();
  const double s = 0.5 * d - 1.0;
  const NormSpec weighted = NormSpec::hst(s, s, z_alpha(d));
  return norm_hst(state.v, part, NormSpec::sobolev(s)) + norm_hst(state.E, part, weighted) +
         norm_hst(state.B, part, weighted);
}

}  // namespace nsm
