// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "nsm/spectral_field.hpp"

namespace nsm {

/// State Gamma = (v, E, B) of the Navier-Stokes-Maxwell system at one time.
/// v and B are divergence free; the pressure is never stored.
struct MhdState {
  SpectralField v;
  SpectralField E;
  SpectralField B;
  double time = 0.0;

  explicit MhdState(GridPtr grid) : v(grid), E(grid), B(grid) {}
  MhdState(SpectralField v_, SpectralField E_, SpectralField B_, double time_ = 0.0);

  const Grid& grid() const { return v.grid(); }
  const GridPtr& grid_ptr() const { return v.grid_ptr(); }

  SpectralField& slot(int i) { return i == 0 ? v : (i == 1 ? E : B); }
  const SpectralField& slot(int i) const { return i == 0 ? v : (i == 1 ? E : B); }

  MhdState& operator+=(const MhdState& o);
  MhdState& operator-=(const MhdState& o);
  MhdState& operator*=(double s);
  /// this += s * o (time unchanged)
  MhdState& axpy(double s, const MhdState& o);

  friend MhdState operator+(MhdState a, const MhdState& b) { return a += b; }
  friend MhdState operator-(MhdState a, const MhdState& b) { return a -= b; }
  friend MhdState operator*(double s, MhdState a) { return a *= s; }

  bool all_finite() const;
  double max_abs() const;

  /// max(||div v||, ||div B||) in L^2.
  double divergence_defect() const;

  /// Zero unresolved modes and the mean of v, then Leray-project v and B.
  void make_consistent();
};

}  // namespace nsm
