// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsm/spectral_field.hpp"

namespace nsm::harness {

/// Gaussian spectral ensemble: c(k) ~ |k|^{-slope} (N(0,1) + i N(0,1)) per
/// component, Hermitian, 2/3-truncated, zero mean. With `shell` set the
/// samples are cut down to Delta_shell; with `div_free` they are
/// Leray-projected after sampling.
struct FieldEnsembleSpec {
  std::uint64_t seed = 0;
  int count = 20;
  double slope = 2.0;
  std::optional<int> shell;
  bool div_free = false;
  GridPtr grid;
};

/// Member `index` of the ensemble. Depends only on (seed, index) and the
/// spec, so members can be drawn independently.
SpectralField ensemble_member(const FieldEnsembleSpec& spec, int index);

std::vector<SpectralField> gen_ensemble(const FieldEnsembleSpec& spec);

/// Least-squares slope beta in |c(k)| ~ |k|^{-beta}, fitted on the
/// shell-averaged power over integer |m| bins of the resolved modes.
double fit_spectral_slope(const SpectralField& f);

/// Coherent shell packet c(k) = w_q(k) e^{-i k.center} dir, with w_q the
/// partition weight of shell q (the Delta_q kernel placed at `center`).
/// Leray-projected when div_free.
SpectralField shell_packet(const GridPtr& grid, int q, const Vec3& dir, const Vec3& center, bool div_free);

}  // namespace nsm::harness
