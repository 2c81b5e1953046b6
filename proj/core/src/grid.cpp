// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "nsm/error.hpp"

namespace nsm {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int wrap_wavenumber(int i, int n) { return i <= n / 2 ? i : i - n; }

}  // namespace

struct Grid::Plans {
  fftw_plan forward = nullptr;   // r2c
  fftw_plan backward = nullptr;  // c2r

  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

GridPtr Grid::create(int dim, int n, double box_length) {
  return GridPtr(new Grid(dim, n, box_length));
}

Grid::Grid(int dim, int n, double box_length)
    : dim_(dim), n_(n), box_length_(box_length) {
  if (dim != 2 && dim != 3) throw InvalidArgument("grid dimension must be 2 or 3");
  if (n < 8 || !is_power_of_two(n)) throw InvalidArgument("grid size must be a power of two >= 8");
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw InvalidArgument("box length must be positive and finite");
  }
  k_unit_ = 2.0 * std::numbers::pi / box_length;
  volume_ = std::pow(box_length, dim);
  cutoff_ = n / 3;
  size_ = 1;
  for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(n);
  half_size_ = size_ / static_cast<std::size_t>(n) * static_cast<std::size_t>(n / 2 + 1);

  k_.resize(size_);
  ksq_.resize(size_);
  m_.resize(size_);
  resolved_.resize(size_);
  nyquist_.resize(size_);
  conj_.resize(size_);

  for (std::size_t idx = 0; idx < size_; ++idx) {
    std::array<int, 3> raw{0, 0, 0};
    std::size_t rem = idx;
    for (int a = dim - 1; a >= 0; --a) {
      raw[a] = static_cast<int>(rem % static_cast<std::size_t>(n));
      rem /= static_cast<std::size_t>(n);
    }
    std::array<int, 3> m{0, 0, 0};
    bool nyq = false;
    bool res = true;
    for (int a = 0; a < dim; ++a) {
      m[a] = wrap_wavenumber(raw[a], n);
      if (m[a] == n / 2) nyq = true;
      if (std::abs(m[a]) > cutoff_) res = false;
    }
    m_[idx] = m;
    nyquist_[idx] = nyq ? 1 : 0;
    resolved_[idx] = res ? 1 : 0;
    Vec3 k{k_unit_ * m[0], k_unit_ * m[1], dim == 3 ? k_unit_ * m[2] : 0.0};
    k_[idx] = k;
    ksq_[idx] = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    conj_[idx] = index_of({-m[0], -m[1], -m[2]});
    if (!nyq) {
      const double kabs = std::sqrt(ksq_[idx]);
      k_max_ = std::max(k_max_, kabs);
      if (res) k_max_resolved_ = std::max(k_max_resolved_, kabs);
    }
  }

  plans_ = std::make_unique<Plans>();
  std::vector<double> real(size_);
  std::vector<cplx> half(half_size_);
  std::array<int, 3> dims{n, n, n};
  std::lock_guard lock(planner_mutex());
  // ESTIMATE keeps planning deterministic; UNALIGNED lets us execute on any
  // std::vector buffer without alignment-dependent codelet selection.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plans_->forward = fftw_plan_dft_r2c(dim, dims.data(), real.data(),
                                      reinterpret_cast<fftw_complex*>(half.data()), flags);
  plans_->backward = fftw_plan_dft_c2r(dim, dims.data(),
                                       reinterpret_cast<fftw_complex*>(half.data()),
                                       real.data(), flags);
  if (!plans_->forward || !plans_->backward) throw std::runtime_error("FFTW planning failed");
}

Grid::~Grid() = default;

std::size_t Grid::index_of(std::array<int, 3> m) const {
  std::size_t idx = 0;
  for (int a = 0; a < dim_; ++a) {
    int raw = m[a] % n_;
    if (raw < 0) raw += n_;
    idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(raw);
  }
  return idx;
}

Vec3 Grid::point(std::size_t j) const {
  Vec3 x{0.0, 0.0, 0.0};
  const double h = spacing();
  for (int a = dim_ - 1; a >= 0; --a) {
    x[a] = h * static_cast<double>(j % static_cast<std::size_t>(n_));
    j /= static_cast<std::size_t>(n_);
  }
  return x;
}

void Grid::to_physical(std::span<const cplx> coeffs, std::span<double> values) const {
  if (coeffs.size() != size_ || values.size() != size_) {
    throw InvalidArgument("transform buffer size mismatch");
  }
  const std::size_t nh = static_cast<std::size_t>(n_ / 2 + 1);
  const std::size_t nn = static_cast<std::size_t>(n_);
  const std::size_t rows = size_ / nn;
  std::vector<cplx> half(half_size_);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < nh; ++j) half[r * nh + j] = coeffs[r * nn + j];
  }
  fftw_execute_dft_c2r(plans_->backward, reinterpret_cast<fftw_complex*>(half.data()),
                       values.data());
}

void Grid::to_spectral(std::span<const double> values, std::span<cplx> coeffs) const {
  if (coeffs.size() != size_ || values.size() != size_) {
    throw InvalidArgument("transform buffer size mismatch");
  }
  const std::size_t nh = static_cast<std::size_t>(n_ / 2 + 1);
  const std::size_t nn = static_cast<std::size_t>(n_);
  const std::size_t rows = size_ / nn;
  std::vector<double> in(values.begin(), values.end());
  std::vector<cplx> half(half_size_);
  fftw_execute_dft_r2c(plans_->forward, in.data(), reinterpret_cast<fftw_complex*>(half.data()));
  const double scale = 1.0 / static_cast<double>(size_);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < nh; ++j) coeffs[r * nn + j] = half[r * nh + j] * scale;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = nh; j < nn; ++j) {
      const std::size_t idx = r * nn + j;
      coeffs[idx] = std::conj(coeffs[conj_[idx]]);
    }
  }
}

}  // namespace nsm
