// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <vector>

namespace nsm::harness {

/// Fourier profile of a radial function on R^2, f(x) = (2 pi)^-2 int F(|xi|) e^{i x.xi} dxi.
using RadialProfile = std::function<double(double)>;

/// ||Delta_i f||_{L^2(R^2)} for a radial profile supported in [0, rho_max].
double radial_shell_l2(const RadialProfile& F, int i);

/// ||f||_{L^2(R^2)} for a radial profile supported in [0, rho_max].
double radial_l2(const RadialProfile& F, double rho_max);

/// Paraproduct pieces of the product f g of two radial functions whose
/// profiles F, G are supported in [lo, hi] (lo > 0), evaluated through the
/// convolution (fg)^(xi) = (2 pi)^-2 int F(|eta|) G(|xi - eta|) K(|eta|, |xi - eta|) deta
/// with K the frequency kernel of the piece.
class RadialProduct {
 public:
  enum class Piece {
    paraproduct,  // T_f g + T_g f
    remainder,    // R(f, g)
  };

  RadialProduct(RadialProfile F, RadialProfile G, double lo, double hi);

  /// Profile of the piece at |xi| = rho: the Chebyshev interpolant once
  /// tabulate() has run, direct quadrature otherwise.
  double spectrum(Piece piece, double rho) const;
  /// Quadrature value at |xi| = rho (memoized).
  double direct_spectrum(Piece piece, double rho) const;
  /// Interpolate both pieces in rho on [-rho_max, rho_max] (they are even)
  /// from `nodes` Chebyshev points; nodes must be even.
  void tabulate(int nodes);
  /// Upper end of the support of every piece.
  double rho_max() const { return 2.0 * hi_; }

 private:
  RadialProfile F_;
  RadialProfile G_;
  double lo_;
  double hi_;
  mutable std::map<std::pair<int, double>, double> cache_;
  std::vector<double> cheb_[2];
};

/// The Delta_0 kernel profile phi(|xi|), supported in [3/4, 8/3].
double shell_zero_profile(double rho);

}  // namespace nsm::harness
