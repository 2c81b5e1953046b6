// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/harness/radial.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nsm/error.hpp"
#include "nsm/littlewood_paley.hpp"

namespace nsm::harness {

namespace {

constexpr double kPi = std::numbers::pi;

using boost::math::quadrature::gauss_kronrod;

// int_a^b f over geometric panels, fixed 61-point rule on each.
template <class F>
double panel_integral(F&& f, double a, double b, int panels) {
  const double r = std::pow(b / a, 1.0 / panels);
  double sum = 0.0;
  double x0 = a;
  for (int p = 0; p < panels; ++p) {
    const double x1 = p + 1 == panels ? b : x0 * r;
    sum += gauss_kronrod<double, 61>::integrate(f, x0, x1, 0, 0.0);
    x0 = x1;
  }
  return sum;
}

// Shells j whose bump phi(2^-j x) can be nonzero at x > 0.
int first_shell(double x) { return static_cast<int>(std::floor(std::log2(x * 3.0 / 8.0))); }

double paraproduct_kernel(double a, double b) {
  // sum_j chi(2^{1-j} a) phi(2^-j b) + the same with a and b swapped.
  double k = 0.0;
  for (int j = first_shell(b); j <= first_shell(b) + 2; ++j) {
    k += lp_chi(std::ldexp(a, 1 - j)) * lp_phi(std::ldexp(b, -j));
  }
  for (int j = first_shell(a); j <= first_shell(a) + 2; ++j) {
    k += lp_phi(std::ldexp(a, -j)) * lp_chi(std::ldexp(b, 1 - j));
  }
  return k;
}

double remainder_kernel(double a, double b) {
  double k = 0.0;
  for (int j = first_shell(a); j <= first_shell(a) + 2; ++j) {
    const double pa = lp_phi(std::ldexp(a, -j));
    if (pa == 0.0) continue;
    k += pa * (lp_phi(std::ldexp(b, 1 - j)) + lp_phi(std::ldexp(b, -j)) + lp_phi(std::ldexp(b, -j - 1)));
  }
  return k;
}

}  // namespace

double shell_zero_profile(double rho) { return lp_phi(rho); }

double radial_shell_l2(const RadialProfile& F, int i) {
  const double a = 0.75 * std::ldexp(1.0, i), b = 8.0 / 3.0 * std::ldexp(1.0, i);
  const double sq = panel_integral(
      [&](double rho) {
        const double w = lp_phi(std::ldexp(rho, -i)) * F(rho);
        return w * w * rho;
      },
      a, b, 8);
  return std::sqrt(sq / (2.0 * kPi));
}

double radial_l2(const RadialProfile& F, double rho_max) {
  if (!(rho_max > 0.0)) throw InvalidArgument("rho_max must be positive");
  // Dyadic panels down to a negligible inner disc.
  const double inner = std::ldexp(rho_max, -40);
  const double sq = panel_integral([&](double rho) { return F(rho) * F(rho) * rho; }, inner, rho_max, 40) +
                    0.5 * inner * inner * F(0.0) * F(0.0);
  return std::sqrt(sq / (2.0 * kPi));
}

RadialProduct::RadialProduct(RadialProfile F, RadialProfile G, double lo, double hi)
    : F_(std::move(F)), G_(std::move(G)), lo_(lo), hi_(hi) {
  if (!(lo > 0.0) || !(hi > lo)) throw InvalidArgument("profile support must satisfy 0 < lo < hi");
}

double RadialProduct::spectrum(Piece piece, double rho) const {
  const auto& c = cheb_[static_cast<int>(piece)];
  if (c.empty()) return direct_spectrum(piece, rho);
  if (rho < 0.0) throw InvalidArgument("rho must be >= 0");
  if (rho >= rho_max()) return 0.0;
  // Clenshaw on the even coefficients.
  const double x = rho / rho_max();
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t n = c.size(); n-- > 1;) {
    const double b0 = 2.0 * x * b1 - b2 + c[n];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + 0.5 * c[0];
}

void RadialProduct::tabulate(int nodes) {
  if (nodes < 2 || nodes % 2 != 0) throw InvalidArgument("Chebyshev node count must be even and >= 2");
  const auto n = static_cast<std::size_t>(nodes);
  for (int p = 0; p < 2; ++p) {
    std::vector<double> f(n);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double x = std::cos(kPi * (static_cast<double>(k) + 0.5) / nodes);
      f[k] = f[n - 1 - k] = direct_spectrum(static_cast<Piece>(p), rho_max() * x);
    }
    std::vector<double> c(n, 0.0);
    for (std::size_t m = 0; m < n; m += 2) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += f[k] * std::cos(kPi * static_cast<double>(m) * (static_cast<double>(k) + 0.5) / nodes);
      }
      c[m] = 2.0 * sum / nodes;
    }
    cheb_[p] = std::move(c);
  }
}

double RadialProduct::direct_spectrum(Piece piece, double rho) const {
  if (rho < 0.0) throw InvalidArgument("rho must be >= 0");
  if (rho >= 2.0 * hi_) return 0.0;
  const auto key = std::make_pair(static_cast<int>(piece), rho);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  auto kernel = piece == Piece::paraproduct ? paraproduct_kernel : remainder_kernel;
  // eta = (s cos t, s sin t), xi = (rho, 0); the integrand is even in t.
  auto inner = [&](double s) {
    const double fs = F_(s);
    if (fs == 0.0) return 0.0;
    auto angular = [&](double t) {
      const double b = std::sqrt(std::max(0.0, rho * rho + s * s - 2.0 * rho * s * std::cos(t)));
      if (b < lo_ || b > hi_) return 0.0;
      const double g = G_(b);
      return g == 0.0 ? 0.0 : g * kernel(s, b);
    };
    // Restrict t to where |xi - eta| can lie in [lo, hi].
    double t0 = 0.0, t1 = kPi;
    if (rho > 0.0) {
      auto angle = [&](double b) {
        const double c = (rho * rho + s * s - b * b) / (2.0 * rho * s);
        return std::acos(std::clamp(c, -1.0, 1.0));
      };
      t0 = angle(lo_);
      t1 = angle(hi_);
      if (t1 < t0) std::swap(t0, t1);
    }
    if (t1 <= t0) return 0.0;
    return 2.0 * fs * s * gauss_kronrod<double, 31>::integrate(angular, t0, t1, 6, 1e-10);
  };
  const double value = gauss_kronrod<double, 31>::integrate(inner, lo_, hi_, 6, 1e-10) / (4.0 * kPi * kPi);
  cache_.emplace(key, value);
  return value;
}

}  // namespace nsm::harness
