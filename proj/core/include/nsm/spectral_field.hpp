// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "nsm/grid.hpp"

namespace nsm {

/// Real-space samples of an R^3-valued field on a grid.
struct PhysicalField {
  GridPtr grid;
  std::array<std::vector<double>, 3> comp;

  explicit PhysicalField(GridPtr g);
  std::size_t size() const { return comp[0].size(); }
};

/// R^3-valued periodic field stored as Fourier coefficients of all n^d modes,
/// component-major. Coefficients obey c(-k) = conj(c(k)) and vanish on
/// Nyquist modes.
class SpectralField {
 public:
  explicit SpectralField(GridPtr grid);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::size_t modes() const { return grid_->size(); }

  std::span<cplx> component(int c) { return {data_.data() + offset(c), modes()}; }
  std::span<const cplx> component(int c) const { return {data_.data() + offset(c), modes()}; }
  cplx& at(int c, std::size_t mode) { return data_[offset(c) + mode]; }
  const cplx& at(int c, std::size_t mode) const { return data_[offset(c) + mode]; }
  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  std::array<cplx, 3> mode(std::size_t m) const { return {at(0, m), at(1, m), at(2, m)}; }
  void set_mode(std::size_t m, const std::array<cplx, 3>& v) {
    for (int c = 0; c < 3; ++c) at(c, m) = v[c];
  }

  /// The k = 0 coefficients (spatial means).
  std::array<cplx, 3> mean() const { return mode(0); }
  void remove_mean();

  static SpectralField from_physical(const PhysicalField& phys);
  /// Samples f(x) on the grid and transforms.
  static SpectralField from_function(GridPtr grid, const std::function<Vec3(const Vec3&)>& f);
  PhysicalField to_physical() const;

  /// Zero every mode outside the 2/3-rule box (includes Nyquist).
  void truncate();
  /// Zero Nyquist modes and replace c(k) by (c(k) + conj c(-k)) / 2.
  void enforce_reality();
  /// Largest |c(k) - conj c(-k)| over all modes and components.
  double hermitian_defect() const;
  /// max |c| over all coefficients.
  double max_abs() const;
  bool all_finite() const;

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double s);
  /// this += s * o
  SpectralField& axpy(double s, const SpectralField& o);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

 private:
  std::size_t offset(int c) const { return static_cast<std::size_t>(c) * modes(); }
  void require_same_grid(const SpectralField& o) const;

  GridPtr grid_;
  std::vector<cplx> data_;
};

}  // namespace nsm
