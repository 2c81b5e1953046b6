// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/mhd_state.hpp"

#include <algorithm>

#include "nsm/error.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm {

MhdState::MhdState(SpectralField v_, SpectralField E_, SpectralField B_, double time_)
    : v(std::move(v_)), E(std::move(E_)), B(std::move(B_)), time(time_) {
  if (!same_grid(v.grid(), E.grid()) || !same_grid(v.grid(), B.grid())) {
    throw InvalidArgument("state fields live on different grids");
  }
}

MhdState& MhdState::operator+=(const MhdState& o) {
  v += o.v;
  E += o.E;
  B += o.B;
  return *this;
}

MhdState& MhdState::operator-=(const MhdState& o) {
  v -= o.v;
  E -= o.E;
  B -= o.B;
  return *this;
}

MhdState& MhdState::operator*=(double s) {
  v *= s;
  E *= s;
  B *= s;
  return *this;
}

MhdState& MhdState::axpy(double s, const MhdState& o) {
  v.axpy(s, o.v);
  E.axpy(s, o.E);
  B.axpy(s, o.B);
  return *this;
}

bool MhdState::all_finite() const { return v.all_finite() && E.all_finite() && B.all_finite(); }

double MhdState::max_abs() const { return std::max({v.max_abs(), E.max_abs(), B.max_abs()}); }

double MhdState::divergence_defect() const {
  return std::max(divergence_norm(v), divergence_norm(B));
}

void MhdState::make_consistent() {
  for (int i = 0; i < 3; ++i) {
    slot(i).enforce_reality();
    slot(i).truncate();
  }
  v.remove_mean();
  v = leray_project(v);
  B = leray_project(B);
}

}  // namespace nsm
