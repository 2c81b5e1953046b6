// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace nsm {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

class Grid;
using GridPtr = std::shared_ptr<const Grid>;

/// Periodic box [0, L)^d sampled with n points per axis.
///
/// Spectral data covers all n^d modes in FFT order, row-major with x1 slowest.
/// Integer wavenumbers m lie in {-n/2+1, ..., n/2}; the physical wavevector is
/// k = (2 pi / L) m, padded with k3 = 0 when d = 2 so that the planar operators
/// (grad = (d1, d2, 0), curl, div) fall out of the 3D formulas.
///
/// A mode is "resolved" when every |m_i| <= n/3 (the 2/3 dealiasing rule).
/// Nyquist modes (some m_i = n/2) are never resolved.
class Grid {
 public:
  static GridPtr create(int dim, int n, double box_length);

  ~Grid();
  Grid(const Grid&) = delete;
  Grid& operator=(const Grid&) = delete;

  int dim() const noexcept { return dim_; }
  int n() const noexcept { return n_; }
  double box_length() const noexcept { return box_length_; }
  double k_unit() const noexcept { return k_unit_; }
  double volume() const noexcept { return volume_; }
  int dealias_cutoff() const noexcept { return cutoff_; }

  /// Number of modes (= number of physical points).
  std::size_t size() const noexcept { return size_; }

  const Vec3& k(std::size_t mode) const { return k_[mode]; }
  double ksq(std::size_t mode) const { return ksq_[mode]; }
  const std::array<int, 3>& m(std::size_t mode) const { return m_[mode]; }
  bool resolved(std::size_t mode) const { return resolved_[mode] != 0; }
  bool nyquist(std::size_t mode) const { return nyquist_[mode] != 0; }
  /// Index of the mode -m (wrapping).
  std::size_t conj_index(std::size_t mode) const { return conj_[mode]; }
  /// Linear index for integer wavenumbers (any sign; wrapped modulo n).
  std::size_t index_of(std::array<int, 3> m) const;

  /// Smallest nonzero |k| and largest |k| over non-Nyquist modes.
  double k_min() const noexcept { return k_unit_; }
  double k_max() const noexcept { return k_max_; }
  double k_max_resolved() const noexcept { return k_max_resolved_; }

  /// Physical coordinates of grid point j.
  Vec3 point(std::size_t j) const;
  double spacing() const noexcept { return box_length_ / n_; }

  /// Inverse transform: u(x) = sum_k c(k) exp(i k.x). Input must be Hermitian;
  /// only the half spectrum with m_d >= 0 is read.
  void to_physical(std::span<const cplx> coeffs, std::span<double> values) const;
  /// Forward transform: c(k) = N^{-1} sum_x u(x) exp(-i k.x). Output is exactly
  /// Hermitian (negative half filled by conjugation).
  void to_spectral(std::span<const double> values, std::span<cplx> coeffs) const;

  bool operator==(const Grid& other) const noexcept {
    return dim_ == other.dim_ && n_ == other.n_ && box_length_ == other.box_length_;
  }

 private:
  Grid(int dim, int n, double box_length);

  struct Plans;

  int dim_;
  int n_;
  double box_length_;
  double k_unit_;
  double volume_;
  int cutoff_;
  std::size_t size_;
  std::size_t half_size_;
  double k_max_ = 0.0;
  double k_max_resolved_ = 0.0;

  std::vector<Vec3> k_;
  std::vector<double> ksq_;
  std::vector<std::array<int, 3>> m_;
  std::vector<unsigned char> resolved_;
  std::vector<unsigned char> nyquist_;
  std::vector<std::size_t> conj_;
  std::unique_ptr<Plans> plans_;
};

/// Same discretization (pointer or value equality).
inline bool same_grid(const Grid& a, const Grid& b) { return &a == &b || a == b; }

}  // namespace nsm
