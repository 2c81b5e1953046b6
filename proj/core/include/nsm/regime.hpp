// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace nsm {

/// Low-frequency envelopes of Phi1, Phi2 on the shell 2^{q-1} <= |xi| <= 2^{q+1}
/// (q <= -3), with lambda_q = sqrt(1/4 - 2^{2(q-1)}):
///   Phi_q^1(t) = e^{-t/2} cosh(lambda_q t),  Phi_q^2(t) = e^{-t/2} sinh(lambda_q t) / lambda_q
double regime_phi(int i, int q, double t);

/// ||Phi_q^i||_{L^r(0, inf)} by adaptive quadrature, r >= 1.
double regime_lr_norm(int i, int q, double r);

/// Decay-rate fit for the high-frequency bounds |Phi1| <= A e^{-ct},
/// |xi| |Phi2| <= A e^{-ct}.
struct DecayFit {
  double c;          // smallest fitted rate over the sampled |xi|
  double constant;   // smallest A making both bounds hold with that c
  std::vector<double> xi;
  std::vector<double> rates;  // fitted rate per |xi|
};

/// Fit on t in [0, t_max] sampled with `samples` points; each |xi| must be >= 2.
DecayFit fit_high_frequency_decay(const std::vector<double>& xi, double t_max = 10.0, int samples = 2001);

/// Result of fitting ||Phi_q^i||_{L^r} <= C 2^{-2q/r} over a set of shells.
struct LowShellFit {
  double constant;  // max over (i, q, r) of ||Phi_q^i||_{L^r} 2^{2q/r}
  double min_constant;
  std::vector<int> shells;
  std::vector<double> exponents;
  std::vector<std::vector<double>> norms;  // [i-1 + 2*(r index)][shell index]
};

LowShellFit fit_low_shell_norms(const std::vector<int>& shells, const std::vector<double>& exponents);

}  // namespace nsm
