// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "nsm/spectral_field.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm {

/// Smooth radial cutoff: 1 on [0, 3/4], 0 on [4/3, inf), C-infinity in between
/// (exp(-1/x) transition).
double lp_chi(double r);

/// Dyadic bump phi(r) = chi(r/2) - chi(r), supported in [3/4, 8/3].
/// sum_q phi(2^-q r) = 1 for r > 0 and phi(2^-q .) phi(2^-j .) = 0 for |q-j| >= 2.
double lp_phi(double r);

/// Dyadic partition of unity tabulated on the nonzero modes of a grid.
///
/// Shells q_min..q_max cover every non-Nyquist mode. The two boundary shells
/// absorb the tails (the lowest uses chi(2^{-q_min-1}|k|), the highest
/// 1 - chi(2^{-q_max}|k|)), so the weights sum to exactly one mode by mode.
/// The k = 0 mode carries no weight; low-pass operators add it back.
class DyadicPartition {
 public:
  explicit DyadicPartition(GridPtr grid);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  int q_min() const { return q_min_; }
  int q_max() const { return q_max_; }
  int shell_count() const { return q_max_ - q_min_ + 1; }

  /// Weight of shell q at a mode; 0 outside [q_min, q_max].
  double weight(int q, std::size_t mode) const;
  /// Lowest shell with non-zero weight at this mode (q_min - 1 for k = 0).
  int lowest_shell(std::size_t mode) const { return q_min_ + lo_[mode]; }

  /// Natural (untruncated) bump phi(2^-q |k|) at a mode.
  double natural_weight(int q, std::size_t mode) const;

 private:
  GridPtr grid_;
  int q_min_ = 0;
  int q_max_ = 0;
  std::vector<std::int8_t> lo_;
  std::vector<double> w0_;
  std::vector<double> w1_;
};

/// Delta_q u. Throws InvalidArgument for q outside [q_min, q_max].
SpectralField block(const SpectralField& u, const DyadicPartition& part, int q);

/// Delta_{q-1} + Delta_q + Delta_{q+1} (shells outside the range contribute 0).
SpectralField block_tilde(const SpectralField& u, const DyadicPartition& part, int q);

/// S_q u = mean + sum_{j <= q-1} Delta_j u. Any q <= q_max + 1 is accepted;
/// q <= q_min gives the mean only and q = q_max + 1 gives u.
SpectralField low_pass(const SpectralField& u, const DyadicPartition& part, int q);

/// Per-shell ||Delta_q u||_{L^2}, index q - q_min.
std::vector<double> shell_l2(const SpectralField& u, const DyadicPartition& part);

/// Per-shell ||Delta_q u||_{L^inf} (one inverse transform per shell).
std::vector<double> shell_linf(const SpectralField& u, const DyadicPartition& part);

struct BonyParts {
  SpectralField low_high;   // T_u v = sum_q S_{q-1}u (*) Delta_q v
  SpectralField high_low;   // T_v u = sum_q Delta_q u (*) S_{q-1}v
  SpectralField remainder;  // R(u,v) = sum_q Delta_q u (*) Delta~_q v, plus mean(u) (*) mean(v)

  SpectralField sum() const;
};

/// Paraproduct split of the dealiased product u (*) v, where (*) is the cross
/// product or the componentwise product. The operand order is kept in every
/// piece so that the split is valid for the (antisymmetric) cross product.
BonyParts bony_decompose(const SpectralField& u, const SpectralField& v, const DyadicPartition& part,
                         Combiner combiner = Combiner::scalar);

}  // namespace nsm
