// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/spectral_field.hpp"

#include <algorithm>
#include <cmath>

#include "nsm/error.hpp"

namespace nsm {

PhysicalField::PhysicalField(GridPtr g) : grid(std::move(g)) {
  for (auto& c : comp) c.assign(grid->size(), 0.0);
}

SpectralField::SpectralField(GridPtr grid) : grid_(std::move(grid)) {
  if (!grid_) throw InvalidArgument("null grid");
  data_.assign(3 * grid_->size(), cplx{});
}

void SpectralField::remove_mean() {
  for (int c = 0; c < 3; ++c) at(c, 0) = 0.0;
}

SpectralField SpectralField::from_physical(const PhysicalField& phys) {
  SpectralField out(phys.grid);
  for (int c = 0; c < 3; ++c) phys.grid->to_spectral(phys.comp[c], out.component(c));
  for (std::size_t m = 0; m < out.modes(); ++m) {
    if (out.grid().nyquist(m)) out.set_mode(m, {});
  }
  return out;
}

SpectralField SpectralField::from_function(GridPtr grid,
                                           const std::function<Vec3(const Vec3&)>& f) {
  PhysicalField phys(grid);
  for (std::size_t j = 0; j < grid->size(); ++j) {
    const Vec3 v = f(grid->point(j));
    for (int c = 0; c < 3; ++c) phys.comp[c][j] = v[c];
  }
  return from_physical(phys);
}

PhysicalField SpectralField::to_physical() const {
  PhysicalField phys(grid_);
  for (int c = 0; c < 3; ++c) grid_->to_physical(component(c), phys.comp[c]);
  return phys;
}

void SpectralField::truncate() {
  const Grid& g = *grid_;
  for (std::size_t m = 0; m < modes(); ++m) {
    if (!g.resolved(m)) {
      for (int c = 0; c < 3; ++c) at(c, m) = 0.0;
    }
  }
}

void SpectralField::enforce_reality() {
  const Grid& g = *grid_;
  for (int c = 0; c < 3; ++c) {
    auto comp = component(c);
    for (std::size_t m = 0; m < modes(); ++m) {
      if (g.nyquist(m)) {
        comp[m] = 0.0;
        continue;
      }
      const std::size_t mc = g.conj_index(m);
      if (mc < m) continue;
      const cplx avg = 0.5 * (comp[m] + std::conj(comp[mc]));
      comp[m] = avg;
      comp[mc] = std::conj(avg);
    }
  }
}

double SpectralField::hermitian_defect() const {
  const Grid& g = *grid_;
  double worst = 0.0;
  for (int c = 0; c < 3; ++c) {
    auto comp = component(c);
    for (std::size_t m = 0; m < modes(); ++m) {
      worst = std::max(worst, std::abs(comp[m] - std::conj(comp[g.conj_index(m)])));
    }
  }
  return worst;
}

double SpectralField::max_abs() const {
  double worst = 0.0;
  for (const cplx& z : data_) worst = std::max(worst, std::abs(z));
  return worst;
}

bool SpectralField::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

void SpectralField::require_same_grid(const SpectralField& o) const {
  if (!same_grid(*grid_, *o.grid_)) throw InvalidArgument("fields live on different grids");
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (cplx& z : data_) z *= s;
  return *this;
}

SpectralField& SpectralField::axpy(double s, const SpectralField& o) {
  require_same_grid(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
  return *this;
}

}  // namespace nsm
