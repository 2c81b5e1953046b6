// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/regime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nsm/error.hpp"
#include "nsm/propagators.hpp"

namespace nsm {

namespace {

struct Rates {
  double slow;    // 1/2 - lambda_q, computed without cancellation
  double fast;    // 1/2 + lambda_q
  double lambda;
};

Rates regime_rates(int q) {
  if (q > -3) throw InvalidArgument("low-frequency regime needs q <= -3");
  const double k2 = std::ldexp(1.0, 2 * (q - 1));
  const double lambda = std::sqrt(0.25 - k2);
  return {k2 / (0.5 + lambda), 0.5 + lambda, lambda};
}

}  // namespace

double regime_phi(int i, int q, double t) {
  if (i != 1 && i != 2) throw InvalidArgument("regime function index must be 1 or 2");
  if (!(t >= 0.0)) throw InvalidArgument("t must be >= 0");
  const Rates r = regime_rates(q);
  const double a = std::exp(-r.slow * t);
  const double b = std::exp(-r.fast * t);
  return i == 1 ? 0.5 * (a + b) : (a - b) / (2.0 * r.lambda);
}

double regime_lr_norm(int i, int q, double r) {
  if (!(r >= 1.0) || !std::isfinite(r)) throw InvalidArgument("L^r exponent must be finite and >= 1");
  const Rates rates = regime_rates(q);
  auto f = [&](double t) { return std::pow(regime_phi(i, q, t), r); };
  // Geometric panels resolve both the O(1) transient and the slow tail.
  const double horizon = 80.0 / (r * rates.slow);
  double total = 0.0;
  double a = 0.0;
  double b = 0.25;
  while (a < horizon) {
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 8, 1e-15);
    a = b;
    b *= 2.0;
  }
  return std::pow(total, 1.0 / r);
}

DecayFit fit_high_frequency_decay(const std::vector<double>& xi, double t_max, int samples) {
  if (xi.empty()) throw InvalidArgument("no frequencies to fit");
  if (samples < 3 || !(t_max > 0.0)) throw InvalidArgument("bad sampling for decay fit");
  DecayFit fit;
  fit.xi = xi;
  std::vector<double> t(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) t[j] = t_max * j / (samples - 1);
  std::vector<std::vector<double>> g(xi.size(), std::vector<double>(t.size()));
  for (std::size_t a = 0; a < xi.size(); ++a) {
    if (!(xi[a] >= 2.0)) throw InvalidArgument("high-frequency fit needs |xi| >= 2");
    for (std::size_t j = 0; j < t.size(); ++j) {
      const PhiPair p = phi_multipliers(t[j], xi[a] * xi[a]);
      g[a][j] = std::max(std::abs(p.phi1), xi[a] * std::abs(p.phi2));
    }
    // Least-squares slope of log(sup_{s >= t} g(s)).
    std::vector<double> env(t.size());
    double running = 0.0;
    for (std::size_t j = t.size(); j-- > 0;) {
      running = std::max(running, g[a][j]);
      env[j] = std::log(running);
    }
    double mt = 0.0, my = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      mt += t[j];
      my += env[j];
    }
    mt /= static_cast<double>(t.size());
    my /= static_cast<double>(t.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      sxy += (t[j] - mt) * (env[j] - my);
      sxx += (t[j] - mt) * (t[j] - mt);
    }
    fit.rates.push_back(-sxy / sxx);
  }
  fit.c = *std::min_element(fit.rates.begin(), fit.rates.end());
  fit.constant = 0.0;
  for (std::size_t a = 0; a < xi.size(); ++a) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      fit.constant = std::max(fit.constant, g[a][j] * std::exp(fit.c * t[j]));
    }
  }
  return fit;
}

LowShellFit fit_low_shell_norms(const std::vector<int>& shells, const std::vector<double>& exponents) {
  LowShellFit fit;
  fit.shells = shells;
  fit.exponents = exponents;
  fit.constant = 0.0;
  fit.min_constant = std::numeric_limits<double>::infinity();
  for (double r : exponents) {
    for (int i = 1; i <= 2; ++i) {
      std::vector<double> row;
      for (int q : shells) {
        const double n = regime_lr_norm(i, q, r);
        row.push_back(n);
        const double scaled = n * std::exp2(2.0 * q / r);
        fit.constant = std::max(fit.constant, scaled);
        fit.min_constant = std::min(fit.min_constant, scaled);
      }
      fit.norms.push_back(std::move(row));
    }
  }
  return fit;
}

}  // namespace nsm
