// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "nsm/mhd_state.hpp"

namespace nsm {

using CVec3 = std::array<cplx, 3>;

/// Damped-wave multipliers solving B'' + B' + |xi|^2 B = 0:
///   Phi1 = e^{-t/2} cosh(sqrt(1/4 - |xi|^2) t)
///   Phi2 = e^{-t/2} sinh(sqrt(1/4 - |xi|^2) t) / sqrt(1/4 - |xi|^2)
/// evaluated with the cos/sin form past |xi| = 1/2 and a Taylor series near it.
struct PhiPair {
  double phi1;
  double phi2;
};
PhiPair phi_multipliers(double t, double ksq);

/// e^{t Delta} u, mode by mode.
SpectralField heat_apply(const SpectralField& u, double t);

/// Exact Duhamel weights for a forcing that is linear in time over one step of
/// length h at |k|^2 = ksq:
///   int_0^h e^{-(h-s)ksq} f(s) ds = w_old f(0) + w_new f(h).
struct HeatWeights {
  double decay;
  double w_old;
  double w_new;
};
HeatWeights heat_weights(double h, double ksq);

/// u(t+h) = e^{h Delta} u + int_0^h e^{(h-s)Delta} f ds with f linear between
/// f_old and f_new.
SpectralField heat_step(const SpectralField& u, const SpectralField& f_old, const SpectralField& f_new,
                        double h);

/// Per-mode damped Maxwell flow E' = -gamma E + i k x B, B' = -i k x E.
/// Both routes project B onto k-transverse vectors first.
///
/// Route (b): B(t) = Phi1 B0 + Phi2 (B0/2 + B1), B1 = -i k x E0, and the same
/// formula for transverse E; longitudinal E decays like e^{-t}. gamma = 1 only.
std::pair<CVec3, CVec3> maxwell_mode_phi(const Vec3& k, const CVec3& E, const CVec3& B, double t);

/// Route (a): diagonalize the 2x2 generator on each helical component of the
/// transverse sector (eigenvalues -gamma/2 +- sqrt(gamma^2/4 - |k|^2)), with a
/// Jordan-form expansion near the double eigenvalue. gamma = 0 is the
/// undamped variant.
std::pair<CVec3, CVec3> maxwell_mode_eigen(const Vec3& k, const CVec3& E, const CVec3& B, double t,
                                           double gamma = 1.0);

/// e^{t A_M}(E, B) on whole fields via route (b).
std::pair<SpectralField, SpectralField> maxwell_apply(const SpectralField& E, const SpectralField& B, double t);

/// e^{t A_M}(E, B) on whole fields via route (a).
std::pair<SpectralField, SpectralField> maxwell_apply_eigen(const SpectralField& E, const SpectralField& B,
                                                            double t, double gamma = 1.0);

/// Per-mode factors of e^{dt A} on a grid, immutable after construction.
class PropagatorTable {
 public:
  PropagatorTable(GridPtr grid, double dt);

  const Grid& grid() const { return *grid_; }
  double dt() const { return dt_; }
  double heat(std::size_t m) const { return heat_[m]; }
  double phi1(std::size_t m) const { return phi1_[m]; }
  double phi2(std::size_t m) const { return phi2_[m]; }

  /// e^{dt A} Gamma (time advanced by dt).
  MhdState apply(const MhdState& state) const;
  /// e^{dt A} applied to an increment (time unchanged).
  MhdState apply_increment(const MhdState& increment) const;

 private:
  void apply_into(const MhdState& in, MhdState& out) const;

  GridPtr grid_;
  double dt_;
  double damp_;
  std::vector<double> heat_;
  std::vector<double> phi1_;
  std::vector<double> phi2_;
};

enum class Scheme { exp_euler, exp_trapezoid };

const char* scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

using Nonlinearity = std::function<MhdState(const MhdState&)>;

/// One exponential-integrator step of Gamma' = A Gamma + N(Gamma).
///   exp-euler:     G1 = e^{dt A}(G0 + dt N(G0))
///   exp-trapezoid: G* = exp-euler, G1 = e^{dt A}(G0 + dt/2 N(G0)) + dt/2 N(G*)
/// The velocity increment is Leray-projected and its mean removed. Throws
/// NumericalBlowup(step_index) on non-finite coefficients.
MhdState duhamel_step(const MhdState& state, const Nonlinearity& nonlinearity, const PropagatorTable& table,
                      Scheme scheme, std::size_t step_index = 0);

}  // namespace nsm
