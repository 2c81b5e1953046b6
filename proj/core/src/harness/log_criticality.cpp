// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/harness/log_criticality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "nsm/error.hpp"
#include "nsm/harness/radial.hpp"
#include "nsm/littlewood_paley.hpp"

namespace nsm::harness {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kTopShell = 3;
constexpr int kChebyshevNodes = 128;

// Shell amplitudes of f_q, read off f_0 by dilation (L^2 is dilation invariant in 2D).
double factor_norm(int q, double (*weight)(int)) {
  double sq = 0.0;
  for (int i = -1; i <= 1; ++i) {
    const double a = radial_shell_l2(shell_zero_profile, i);
    sq += weight(q + i) * a * a;
  }
  return std::sqrt(sq);
}

double plain_weight(int) { return 1.0; }
double log_weight(int j) { return j > 0 ? j : 1.0; }
double h10_weight(int j) { return j <= 0 ? std::exp2(2.0 * j) : 1.0; }

}  // namespace

CriticalityResult log_criticality_experiment(const std::vector<int>& q_sweep) {
  if (q_sweep.empty()) throw InvalidArgument("empty shell sweep");
  for (int q : q_sweep) {
    if (q < 1) throw InvalidArgument("criticality sweep needs q >= 1");
  }
  RadialProduct prod(shell_zero_profile, shell_zero_profile, 0.75, 8.0 / 3.0);
  prod.tabulate(kChebyshevNodes);
  using Piece = RadialProduct::Piece;

  CriticalityResult out;
  for (int q : q_sweep) {
    // At scale 0 the split S_2 sits at frequency 2^{2-q}.
    const int c = 2 - q;
    auto chi = [c](double rho) { return lp_chi(std::ldexp(rho, -c)); };
    // Pieces: 0 = paraproducts, 1 = S_2 R, 2 = (I - S_2) R.
    std::array<RadialProfile, 3> piece{
        [&](double r) { return prod.spectrum(Piece::paraproduct, r); },
        [&, chi](double r) { return chi(r) * prod.spectrum(Piece::remainder, r); },
        [&, chi](double r) { return (1.0 - chi(r)) * prod.spectrum(Piece::remainder, r); },
    };
    double lhs = kInf;
    for (int mask = 0; mask < 8; ++mask) {
      // S_2 R has a nonzero mean and an infinite B^{-1}_{2,1} norm on R^2.
      if (mask & 2) continue;
      auto sum = [&](bool in_x) {
        return RadialProfile([&, in_x, mask](double r) {
          double v = 0.0;
          for (int p = 0; p < 3; ++p) {
            if (bool(mask & (1 << p)) == in_x) v += piece[p](r);
          }
          return v;
        });
      };
      double x = 0.0;
      if (mask != 0) {
        const RadialProfile xs = sum(true);
        const int lowest = std::min(c - 2, -8);
        for (int i = lowest; i <= kTopShell; ++i) x += std::exp2(-i) * radial_shell_l2(xs, i);
      }
      // ||Q_q||_{L^2} = 2^q ||Q_0||_{L^2}.
      const double y = std::exp2(q) * radial_l2(sum(false), prod.rho_max());
      lhs = std::min(lhs, x + y);
    }
    CriticalityRow row;
    row.q = q;
    row.lhs = lhs;
    row.rhs_plain = factor_norm(q, plain_weight) * (factor_norm(q, plain_weight) + factor_norm(q, h10_weight));
    row.rhs_log = factor_norm(q, log_weight) * (factor_norm(q, log_weight) + factor_norm(q, h10_weight));
    row.ratio_plain = lhs / row.rhs_plain;
    row.ratio_log = lhs / row.rhs_log;
    out.rows.push_back(row);
  }

  double lo = kInf, hi = 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& r : out.rows) {
    lo = std::min(lo, r.ratio_log);
    hi = std::max(hi, r.ratio_log);
    const double x = std::log(static_cast<double>(r.q)), y = std::log(r.ratio_plain);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(out.rows.size());
  out.growth_exponent = n > 1 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
  out.log_spread = hi / lo;
  out.plain_growth = out.rows.back().ratio_plain / out.rows.front().ratio_plain;
  return out;
}

}  // namespace nsm::harness
