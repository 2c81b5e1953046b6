// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/propagators.hpp"

#include <cmath>
#include <string>

#include "nsm/error.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm {

namespace {

constexpr double kTaylorThreshold = 1e-8;
constexpr double kJordanThreshold = 1e-5;

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("propagation time must be finite and >= 0");
}

cplx dot(const Vec3& k, const CVec3& u) { return k[0] * u[0] + k[1] * u[1] + k[2] * u[2]; }

/// i k x u
CVec3 curl_symbol(const Vec3& k, const CVec3& u) {
  const cplx i(0.0, 1.0);
  return {i * (k[1] * u[2] - k[2] * u[1]), i * (k[2] * u[0] - k[0] * u[2]), i * (k[0] * u[1] - k[1] * u[0])};
}

/// Split u into (longitudinal, transverse) parts with respect to k != 0.
std::pair<CVec3, CVec3> split_longitudinal(const Vec3& k, double ksq, const CVec3& u) {
  const cplx a = dot(k, u) / ksq;
  CVec3 par{a * k[0], a * k[1], a * k[2]};
  CVec3 perp{u[0] - par[0], u[1] - par[1], u[2] - par[2]};
  return {par, perp};
}

}  // namespace

PhiPair phi_multipliers(double t, double ksq) {
  if (!(t >= 0.0) || !(ksq >= 0.0)) throw InvalidArgument("phi_multipliers needs t >= 0 and |xi|^2 >= 0");
  if (t == 0.0) return {1.0, 0.0};
  const double x = 0.25 - ksq;
  const double damp = std::exp(-0.5 * t);
  const double y = x * t * t;
  if (std::abs(y) < kTaylorThreshold) {
    // cosh(sqrt(x) t) = sum y^j / (2j)!, sinh(sqrt(x) t)/sqrt(x) = t sum y^j / (2j+1)!
    const double c = 1.0 + y / 2.0 * (1.0 + y / 12.0 * (1.0 + y / 30.0));
    const double s = 1.0 + y / 6.0 * (1.0 + y / 20.0 * (1.0 + y / 42.0));
    return {damp * c, damp * t * s};
  }
  if (x > 0.0) {
    const double r = std::sqrt(x);
    const double rt = r * t;
    if (rt < 20.0) return {damp * std::cosh(rt), damp * std::sinh(rt) / r};
    // e^{-t/2} cosh(rt) without overflow
    const double up = std::exp((r - 0.5) * t);
    const double down = std::exp(-(r + 0.5) * t);
    return {0.5 * (up + down), 0.5 * (up - down) / r};
  }
  const double w = std::sqrt(-x);
  return {damp * std::cos(w * t), damp * std::sin(w * t) / w};
}

SpectralField heat_apply(const SpectralField& u, double t) {
  require_time(t);
  const Grid& g = u.grid();
  SpectralField out(u.grid_ptr());
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double f = std::exp(-t * g.ksq(m));
    for (int c = 0; c < 3; ++c) out.at(c, m) = f * u.at(c, m);
  }
  return out;
}

HeatWeights heat_weights(double h, double ksq) {
  require_time(h);
  const double z = h * ksq;
  const double decay = std::exp(-z);
  double phi1;
  double phi2;
  if (z < 1e-3) {
    // phi1 = (1 - e^-z)/z, phi2 = (z - 1 + e^-z)/z^2
    phi1 = 1.0 - z / 2.0 * (1.0 - z / 3.0 * (1.0 - z / 4.0 * (1.0 - z / 5.0)));
    phi2 = 0.5 - z / 6.0 * (1.0 - z / 4.0 * (1.0 - z / 5.0 * (1.0 - z / 6.0)));
  } else {
    phi1 = -std::expm1(-z) / z;
    phi2 = (z + std::expm1(-z)) / (z * z);
  }
  return {decay, h * (phi1 - phi2), h * phi2};
}

SpectralField heat_step(const SpectralField& u, const SpectralField& f_old, const SpectralField& f_new,
                        double h) {
  const Grid& g = u.grid();
  if (!same_grid(g, f_old.grid()) || !same_grid(g, f_new.grid())) {
    throw InvalidArgument("heat_step operands on different grids");
  }
  SpectralField out(u.grid_ptr());
  for (std::size_t m = 0; m < g.size(); ++m) {
    const HeatWeights w = heat_weights(h, g.ksq(m));
    for (int c = 0; c < 3; ++c) {
      out.at(c, m) = w.decay * u.at(c, m) + w.w_old * f_old.at(c, m) + w.w_new * f_new.at(c, m);
    }
  }
  return out;
}

std::pair<CVec3, CVec3> maxwell_mode_phi(const Vec3& k, const CVec3& E, const CVec3& B, double t) {
  require_time(t);
  const double ksq = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
  const double decay = std::exp(-t);
  if (ksq == 0.0) return {{decay * E[0], decay * E[1], decay * E[2]}, B};
  const auto [e_par, e_perp] = split_longitudinal(k, ksq, E);
  const CVec3 b_perp = split_longitudinal(k, ksq, B).second;
  const CVec3 ce = curl_symbol(k, e_perp);
  const CVec3 cb = curl_symbol(k, b_perp);
  const PhiPair p = phi_multipliers(t, ksq);
  CVec3 e_out;
  CVec3 b_out;
  for (int c = 0; c < 3; ++c) {
    // B1 = -curl E0, E1 = -E0 + curl B0
    b_out[c] = p.phi1 * b_perp[c] + p.phi2 * (0.5 * b_perp[c] - ce[c]);
    e_out[c] = decay * e_par[c] + p.phi1 * e_perp[c] + p.phi2 * (-0.5 * e_perp[c] + cb[c]);
  }
  return {e_out, b_out};
}

namespace {

using Mat2 = std::array<std::array<cplx, 2>, 2>;

/// exp(t M) for M = [[-gamma, a], [-a, 0]].
Mat2 expm_wave(double a, double gamma, double t) {
  const cplx lambda = std::sqrt(cplx(0.25 * gamma * gamma - a * a, 0.0));
  const double centre = -0.5 * gamma;
  if (std::abs(lambda) * std::max(t, 1.0) < kJordanThreshold) {
    // M = centre I + N with N^2 = lambda^2 I.
    const cplx l2t2 = lambda * lambda * t * t;
    const cplx c0 = 1.0 + l2t2 / 2.0 + l2t2 * l2t2 / 24.0;
    const cplx c1 = t * (1.0 + l2t2 / 6.0 + l2t2 * l2t2 / 120.0);
    const double e = std::exp(centre * t);
    const Mat2 n{{{-gamma - centre, a}, {-a, -centre}}};
    Mat2 out;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) out[i][j] = e * ((i == j ? c0 : 0.0) + c1 * n[i][j]);
    }
    return out;
  }
  const cplx mu[2] = {centre + lambda, centre - lambda};
  // Eigenvector for mu: (a, gamma + mu).
  const Mat2 v{{{a, a}, {gamma + mu[0], gamma + mu[1]}}};
  const cplx det = v[0][0] * v[1][1] - v[0][1] * v[1][0];
  const Mat2 vinv{{{v[1][1] / det, -v[0][1] / det}, {-v[1][0] / det, v[0][0] / det}}};
  const cplx ex[2] = {std::exp(mu[0] * t), std::exp(mu[1] * t)};
  Mat2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = v[i][0] * ex[0] * vinv[0][j] + v[i][1] * ex[1] * vinv[1][j];
  }
  return out;
}

}  // namespace

std::pair<CVec3, CVec3> maxwell_mode_eigen(const Vec3& k, const CVec3& E, const CVec3& B, double t,
                                           double gamma) {
  require_time(t);
  if (!(gamma >= 0.0)) throw InvalidArgument("damping must be >= 0");
  const double ksq = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
  const double decay = std::exp(-gamma * t);
  if (ksq == 0.0) return {{decay * E[0], decay * E[1], decay * E[2]}, B};
  const double kabs = std::sqrt(ksq);
  const Vec3 kh{k[0] / kabs, k[1] / kabs, k[2] / kabs};
  // e1 perpendicular to k-hat, built from the least aligned axis; e2 = k-hat x e1.
  int axis = 0;
  for (int c = 1; c < 3; ++c) {
    if (std::abs(kh[c]) < std::abs(kh[axis])) axis = c;
  }
  Vec3 e1{0.0, 0.0, 0.0};
  e1[axis] = 1.0;
  const double proj = kh[axis];
  for (int c = 0; c < 3; ++c) e1[c] -= proj * kh[c];
  const double n1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
  for (double& x : e1) x /= n1;
  const Vec3 e2{kh[1] * e1[2] - kh[2] * e1[1], kh[2] * e1[0] - kh[0] * e1[2], kh[0] * e1[1] - kh[1] * e1[0]};

  // Helical basis h_s = (e1 + s i e2)/sqrt2 with i k x h_s = s |k| h_s.
  const cplx i(0.0, 1.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  CVec3 h[2];
  for (int c = 0; c < 3; ++c) {
    h[0][c] = r2 * (e1[c] + i * e2[c]);
    h[1][c] = r2 * (e1[c] - i * e2[c]);
  }
  auto coord = [](const CVec3& basis, const CVec3& u) {
    return std::conj(basis[0]) * u[0] + std::conj(basis[1]) * u[1] + std::conj(basis[2]) * u[2];
  };

  const cplx e_par = kh[0] * E[0] + kh[1] * E[1] + kh[2] * E[2];
  CVec3 e_out{decay * e_par * kh[0], decay * e_par * kh[1], decay * e_par * kh[2]};
  CVec3 b_out{0.0, 0.0, 0.0};
  for (int hs = 0; hs < 2; ++hs) {
    const double s = hs == 0 ? 1.0 : -1.0;
    const cplx e = coord(h[hs], E);
    const cplx b = coord(h[hs], B);
    const Mat2 x = expm_wave(s * kabs, gamma, t);
    const cplx e1c = x[0][0] * e + x[0][1] * b;
    const cplx b1c = x[1][0] * e + x[1][1] * b;
    for (int c = 0; c < 3; ++c) {
      e_out[c] += e1c * h[hs][c];
      b_out[c] += b1c * h[hs][c];
    }
  }
  return {e_out, b_out};
}

namespace {

template <typename ModeFn>
std::pair<SpectralField, SpectralField> apply_per_mode(const SpectralField& E, const SpectralField& B,
                                                       ModeFn&& fn) {
  if (!same_grid(E.grid(), B.grid())) throw InvalidArgument("E and B on different grids");
  const Grid& g = E.grid();
  SpectralField e_out(E.grid_ptr());
  SpectralField b_out(E.grid_ptr());
  for (std::size_t m = 0; m < g.size(); ++m) {
    auto [e, b] = fn(g.k(m), E.mode(m), B.mode(m));
    e_out.set_mode(m, e);
    b_out.set_mode(m, b);
  }
  return {std::move(e_out), std::move(b_out)};
}

}  // namespace

std::pair<SpectralField, SpectralField> maxwell_apply(const SpectralField& E, const SpectralField& B, double t) {
  require_time(t);
  return apply_per_mode(E, B, [t](const Vec3& k, const CVec3& e, const CVec3& b) {
    return maxwell_mode_phi(k, e, b, t);
  });
}

std::pair<SpectralField, SpectralField> maxwell_apply_eigen(const SpectralField& E, const SpectralField& B,
                                                            double t, double gamma) {
  require_time(t);
  auto result = apply_per_mode(E, B, [t, gamma](const Vec3& k, const CVec3& e, const CVec3& b) {
    return maxwell_mode_eigen(k, e, b, t, gamma);
  });
  // Complex helical arithmetic leaves roundoff-level Hermitian defects.
  result.first.enforce_reality();
  result.second.enforce_reality();
  return result;
}

PropagatorTable::PropagatorTable(GridPtr grid, double dt)
    : grid_(std::move(grid)), dt_(dt), damp_(std::exp(-dt)) {
  require_time(dt);
  const std::size_t size = grid_->size();
  heat_.resize(size);
  phi1_.resize(size);
  phi2_.resize(size);
  for (std::size_t m = 0; m < size; ++m) {
    const double ksq = grid_->ksq(m);
    heat_[m] = std::exp(-dt * ksq);
    const PhiPair p = phi_multipliers(dt, ksq);
    phi1_[m] = p.phi1;
    phi2_[m] = p.phi2;
  }
}

void PropagatorTable::apply_into(const MhdState& in, MhdState& out) const {
  const Grid& g = *grid_;
  if (!same_grid(g, in.grid())) throw InvalidArgument("state and propagator table on different grids");
  for (std::size_t m = 0; m < g.size(); ++m) {
    for (int c = 0; c < 3; ++c) out.v.at(c, m) = heat_[m] * in.v.at(c, m);
    const CVec3 e = in.E.mode(m);
    const CVec3 b = in.B.mode(m);
    const double ksq = g.ksq(m);
    if (ksq == 0.0) {
      for (int c = 0; c < 3; ++c) {
        out.E.at(c, m) = damp_ * e[c];
        out.B.at(c, m) = b[c];
      }
      continue;
    }
    const Vec3& k = g.k(m);
    const auto [e_par, e_perp] = split_longitudinal(k, ksq, e);
    const CVec3 b_perp = split_longitudinal(k, ksq, b).second;
    const CVec3 ce = curl_symbol(k, e_perp);
    const CVec3 cb = curl_symbol(k, b_perp);
    const double p1 = phi1_[m];
    const double p2 = phi2_[m];
    for (int c = 0; c < 3; ++c) {
      out.B.at(c, m) = p1 * b_perp[c] + p2 * (0.5 * b_perp[c] - ce[c]);
      out.E.at(c, m) = damp_ * e_par[c] + p1 * e_perp[c] + p2 * (-0.5 * e_perp[c] + cb[c]);
    }
  }
}

MhdState PropagatorTable::apply(const MhdState& state) const {
  MhdState out(state.grid_ptr());
  apply_into(state, out);
  out.time = state.time + dt_;
  return out;
}

MhdState PropagatorTable::apply_increment(const MhdState& increment) const {
  MhdState out(increment.grid_ptr());
  apply_into(increment, out);
  out.time = increment.time;
  return out;
}

const char* scheme_name(Scheme s) { return s == Scheme::exp_euler ? "exp-euler" : "exp-trapezoid"; }

Scheme parse_scheme(const std::string& name) {
  if (name == "exp-euler") return Scheme::exp_euler;
  if (name == "exp-trapezoid") return Scheme::exp_trapezoid;
  throw InvalidArgument("unknown scheme '" + name + "'");
}

namespace {

MhdState evaluate(const Nonlinearity& nonlinearity, const MhdState& state, std::size_t step_index) {
  MhdState n = nonlinearity(state);
  n.v.remove_mean();
  n.v = leray_project(n.v);
  if (!n.all_finite()) throw NumericalBlowup(step_index, "non-finite nonlinearity");
  return n;
}

}  // namespace

MhdState duhamel_step(const MhdState& state, const Nonlinearity& nonlinearity, const PropagatorTable& table,
                      Scheme scheme, std::size_t step_index) {
  const double dt = table.dt();
  const MhdState n0 = evaluate(nonlinearity, state, step_index);
  MhdState next(state.grid_ptr());
  if (scheme == Scheme::exp_euler) {
    MhdState pre = state;
    pre.axpy(dt, n0);
    next = table.apply(pre);
  } else {
    MhdState pre = state;
    pre.axpy(dt, n0);
    const MhdState predictor = table.apply(pre);
    if (!predictor.all_finite()) throw NumericalBlowup(step_index, "non-finite predictor");
    const MhdState n1 = evaluate(nonlinearity, predictor, step_index);
    MhdState half = state;
    half.axpy(0.5 * dt, n0);
    next = table.apply(half);
    next.axpy(0.5 * dt, n1);
  }
  next.time = state.time + dt;
  if (!next.all_finite()) throw NumericalBlowup(step_index, "non-finite state");
  return next;
}

}  // namespace nsm
