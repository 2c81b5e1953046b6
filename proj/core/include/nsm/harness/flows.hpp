// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "nsm/norms.hpp"
#include "nsm/spectral_field.hpp"

namespace nsm::harness {

/// Forcing e^{-rate t} profile.
struct ExpForcing {
  SpectralField profile;
  double rate = 0.0;

  SpectralField at(double t) const;
};

/// 0 followed by `per_decade` geometric nodes per decade from `first` up to
/// T, with every entry of `include` (each in (0, T]) added as a node.
std::vector<double> time_nodes(double T, double first, int per_decade, const std::vector<double>& include = {});

/// Prefix of a history ending at time T (T must be one of its nodes).
FieldHistory truncate_history(const FieldHistory& history, double T);

/// Sum of the forcing terms sampled on `times`, Leray-projected when asked.
FieldHistory forcing_history(const std::vector<ExpForcing>& forcing, const std::vector<double>& times, bool project);

/// Exact solution of u' = Delta u + sum_i e^{-rate_i t} P g_i, u(0) = P u0
/// (P = Leray projection when `project`, identity otherwise).
FieldHistory heat_solution(const SpectralField& u0, const std::vector<ExpForcing>& forcing,
                           const std::vector<double>& times, bool project = true);

struct MaxwellHistory {
  FieldHistory E;
  FieldHistory B;
};

/// Exact solution of E' = -E + curl B + sum_i e^{-rate_i t} g_i, B' = -curl E,
/// built from a per-mode particular solution and the homogeneous propagator.
/// Throws InvalidArgument when a rate resonates with a mode.
MaxwellHistory maxwell_solution(const SpectralField& E0, const SpectralField& B0,
                                const std::vector<ExpForcing>& forcing, const std::vector<double>& times);

}  // namespace nsm::harness
