// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <string>
#include <vector>

#include "nsm/littlewood_paley.hpp"

namespace nsm {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Selects one of the dyadic function-space norms.
///
/// Sobolev-type (kind == hst), squared:
///   sum_{q<=0} 2^{2qs} a_q^2 + sum_{q>0} q^alpha 2^{2qt} a_q^2,  a_q = ||Delta_q u||_{L^2}
/// Besov: || (2^{qs} ||Delta_q u||_{L^p})_q ||_{l^r}
///
/// time_exponent and tilde matter only for space-time norms: tilde applies the
/// L^{r'}_T norm to each a_q before summing shells, plain takes L^{r'}_T of
/// the full spatial norm.
struct NormSpec {
  enum class Kind { hst, besov };

  Kind kind = Kind::hst;
  double s = 0.0;
  double t = 0.0;
  double alpha = 0.0;
  double p = 2.0;
  double r = 2.0;
  double time_exponent = kInf;
  bool tilde = false;

  static NormSpec hst(double s, double t, double alpha = 0.0) {
    return {Kind::hst, s, t, alpha, 2.0, 2.0, kInf, false};
  }
  /// H^s = H^{s,s}_0
  static NormSpec sobolev(double s) { return hst(s, s, 0.0); }
  /// H^s_log = H^{s,s}_1
  static NormSpec sobolev_log(double s) { return hst(s, s, 1.0); }
  static NormSpec besov(double s, double p, double r) {
    return {Kind::besov, s, s, 0.0, p, r, kInf, false};
  }
  /// Space-time variant of this spatial norm.
  NormSpec in_time(double time_exponent_, bool tilde_) const {
    NormSpec out = *this;
    out.time_exponent = time_exponent_;
    out.tilde = tilde_;
    return out;
  }

  std::string name() const;
};

/// Weight multiplying a_q^2 in the Sobolev-type sum.
double hst_weight(int q, const NormSpec& spec);

/// Sobolev-type norm of a spatial field; k = 0 excluded.
double norm_hst(const SpectralField& u, const DyadicPartition& part, const NormSpec& spec);

/// Besov norm, p in {2, inf}, r in {1, 2, inf}.
double norm_besov(const SpectralField& u, const DyadicPartition& part, double s, double p, double r);

/// Dispatch on spec.kind (spatial only).
double spatial_norm(const SpectralField& u, const DyadicPartition& part, const NormSpec& spec);

/// Combine per-shell amplitudes a_q (index q - q_min) with the shell weights.
double combine_shells(const std::vector<double>& amplitudes, int q_min, const NormSpec& spec);

/// A time-sampled single field.
struct FieldHistory {
  std::vector<double> times;
  std::vector<SpectralField> samples;
};

/// L^{r'} norm in time of a sampled scalar function (trapezoid for r' in
/// {1, 2}, max for r' = inf). Requires strictly increasing times.
double time_norm(const std::vector<double>& times, const std::vector<double>& values, double exponent);

/// Space-time norm L^{r'}_T X (plain) or L~^{r'}_T X (tilde).
double spacetime_norm(const FieldHistory& history, const DyadicPartition& part, const NormSpec& spec);

/// L^{r'}_T L^p of a history, p in {2, inf}.
double spacetime_lebesgue(const FieldHistory& history, Lp p, double time_exponent);

}  // namespace nsm
