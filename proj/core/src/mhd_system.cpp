// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/mhd_system.hpp"

#include <cmath>

#include "nsm/error.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm {

namespace {

void check_divergence(const SpectralField& v, double tolerance) {
  const double scale = l2_norm(v);
  if (scale == 0.0) return;
  const double defect = divergence_norm(v);
  if (defect > tolerance * std::max(scale, 1.0)) {
    throw InconsistentState("velocity is not divergence free (||div v|| = " + std::to_string(defect) + ")");
  }
}

}  // namespace

SpectralField ohm_current(const MhdState& state, const MhdParams& params) {
  SpectralField j = pointwise_product(state.v, state.B, Combiner::cross);
  SpectralField e = state.E;
  e.truncate();
  j += e;
  j *= params.sigma;
  return j;
}

SpectralField lorentz_force(const MhdState& state, const MhdParams& params) {
  return pointwise_product(ohm_current(state, params), state.B, Combiner::cross);
}

SpectralField momentum_transport(const SpectralField& v, MomentumForm form) {
  if (form == MomentumForm::advection) {
    SpectralField out = pointwise_product(v, v, Combiner::advection);
    out *= -1.0;
    return out;
  }
  // -sum_j d_j (v_j v_i)
  const Grid& g = v.grid();
  SpectralField out(v.grid_ptr());
  for (int j = 0; j < g.dim(); ++j) {
    SpectralField vj(v.grid_ptr());
    for (int c = 0; c < 3; ++c) {
      auto src = v.component(j);
      auto dst = vj.component(c);
      std::copy(src.begin(), src.end(), dst.begin());
    }
    const SpectralField flux = pointwise_product(vj, v, Combiner::scalar);
    out -= partial(flux, j);
  }
  out.truncate();
  return out;
}

MhdState nonlinearity(const MhdState& state, const MhdParams& params, MomentumForm form) {
  check_divergence(state.v, params.divergence_tolerance);
  MhdState out(state.grid_ptr());
  out.time = state.time;

  const SpectralField vxb = pointwise_product(state.v, state.B, Combiner::cross);
  SpectralField e = state.E;
  e.truncate();
  SpectralField j = e + vxb;
  j *= params.sigma;

  SpectralField force = momentum_transport(state.v, form);
  force += pointwise_product(j, state.B, Combiner::cross);
  if (params.nu != 1.0) force.axpy(params.nu - 1.0, apply_diff(state.v, VectorOp::laplacian));
  force.remove_mean();
  out.v = leray_project(force);

  out.E = vxb;
  out.E *= -params.sigma;
  if (params.sigma != 1.0) out.E.axpy(-(params.sigma - 1.0), e);
  return out;
}

Nonlinearity make_nonlinearity(MhdParams params, MomentumForm form) {
  return [params, form](const MhdState& s) { return nonlinearity(s, params, form); };
}

EnergyReport energy_report(const MhdState& state, const MhdParams& params) {
  EnergyReport r;
  const double v2 = l2_norm(state.v);
  const double e2 = l2_norm(state.E);
  const double b2 = l2_norm(state.B);
  r.energy = 0.5 * (v2 * v2 + e2 * e2 + b2 * b2);
  const double gv = gradient_norm(state.v);
  r.grad_v_sq = gv * gv;
  const double jn = l2_norm(ohm_current(state, params));
  r.j_sq = jn * jn;
  return r;
}

SpectralField pressure(const MhdState& state, const MhdParams& params) {
  SpectralField force = momentum_transport(state.v, MomentumForm::advection);
  force += lorentz_force(state, params);
  const Grid& g = state.grid();
  SpectralField p(state.grid_ptr());
  const cplx i(0.0, 1.0);
  for (std::size_t m = 1; m < g.size(); ++m) {
    const Vec3& k = g.k(m);
    const cplx kf = k[0] * force.at(0, m) + k[1] * force.at(1, m) + k[2] * force.at(2, m);
    p.at(0, m) = -i * kf / g.ksq(m);
  }
  return p;
}

}  // namespace nsm
