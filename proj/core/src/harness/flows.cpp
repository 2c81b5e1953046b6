// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/harness/flows.hpp"

#include <algorithm>
#include <cmath>

#include "nsm/error.hpp"
#include "nsm/propagators.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm::harness {

namespace {

void check_times(const std::vector<double>& times) {
  if (times.empty()) throw InvalidArgument("empty time grid");
  if (times.front() < 0.0) throw InvalidArgument("times must be >= 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw InvalidArgument("times must be strictly increasing");
  }
}

// int_0^t e^{-a (t - s)} e^{-b s} ds, symmetric in (a, b).
double exp_convolution(double a, double b, double t) {
  const double lo = std::min(a, b), hi = std::max(a, b);
  const double z = (hi - lo) * t;
  const double phi1 = z < 1e-12 ? 1.0 - 0.5 * z : -std::expm1(-z) / z;
  return t * std::exp(-lo * t) * phi1;
}

}  // namespace

SpectralField ExpForcing::at(double t) const {
  SpectralField f = profile;
  f *= std::exp(-rate * t);
  return f;
}

std::vector<double> time_nodes(double T, double first, int per_decade, const std::vector<double>& include) {
  if (!(T > 0.0) || !std::isfinite(T)) throw InvalidArgument("T must be positive");
  if (!(first > 0.0) || first > T) throw InvalidArgument("first node must lie in (0, T]");
  if (per_decade < 1) throw InvalidArgument("nodes per decade must be >= 1");
  std::vector<double> t{0.0};
  const double ratio = std::pow(10.0, 1.0 / per_decade);
  for (int i = 0;; ++i) {
    const double x = first * std::pow(ratio, i);
    if (x >= T * (1.0 - 1e-12)) break;
    t.push_back(x);
  }
  t.push_back(T);
  for (double x : include) {
    if (!(x > 0.0) || x > T) throw InvalidArgument("included node outside (0, T]");
    t.push_back(x);
  }
  std::sort(t.begin(), t.end());
  // Merge nodes closer than a relative 1e-9.
  std::vector<double> out;
  for (double x : t) {
    if (!out.empty() && x - out.back() <= 1e-9 * std::max(1.0, x)) {
      if (std::find(include.begin(), include.end(), x) != include.end() || x == T) out.back() = x;
      continue;
    }
    out.push_back(x);
  }
  return out;
}

FieldHistory truncate_history(const FieldHistory& history, double T) {
  const auto it = std::find(history.times.begin(), history.times.end(), T);
  if (it == history.times.end()) throw InvalidArgument("T is not a node of the history");
  const auto n = static_cast<std::size_t>(it - history.times.begin()) + 1;
  FieldHistory out;
  out.times.assign(history.times.begin(), history.times.begin() + static_cast<std::ptrdiff_t>(n));
  out.samples.assign(history.samples.begin(), history.samples.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

FieldHistory forcing_history(const std::vector<ExpForcing>& forcing, const std::vector<double>& times, bool project) {
  check_times(times);
  if (forcing.empty()) throw InvalidArgument("no forcing terms");
  FieldHistory h;
  h.times = times;
  for (double t : times) {
    SpectralField f(forcing.front().profile.grid_ptr());
    for (const auto& term : forcing) f.axpy(std::exp(-term.rate * t), term.profile);
    h.samples.push_back(project ? leray_project(f) : f);
  }
  return h;
}

FieldHistory heat_solution(const SpectralField& u0, const std::vector<ExpForcing>& forcing,
                           const std::vector<double>& times, bool project) {
  check_times(times);
  const Grid& g = u0.grid();
  const SpectralField start = project ? leray_project(u0) : u0;
  std::vector<SpectralField> profiles;
  std::vector<double> rates;
  for (const auto& term : forcing) {
    if (!same_grid(term.profile.grid(), g)) throw InvalidArgument("forcing grid mismatch");
    if (!(term.rate >= 0.0)) throw InvalidArgument("forcing rate must be >= 0");
    profiles.push_back(project ? leray_project(term.profile) : term.profile);
    rates.push_back(term.rate);
  }
  FieldHistory h;
  h.times = times;
  for (double t : times) {
    SpectralField u(u0.grid_ptr());
    for (std::size_t m = 0; m < g.size(); ++m) {
      const double kk = g.ksq(m);
      const double decay = std::exp(-kk * t);
      for (int c = 0; c < 3; ++c) {
        cplx v = decay * start.at(c, m);
        for (std::size_t i = 0; i < profiles.size(); ++i) {
          v += exp_convolution(kk, rates[i], t) * profiles[i].at(c, m);
        }
        u.at(c, m) = v;
      }
    }
    h.samples.push_back(std::move(u));
  }
  return h;
}

MaxwellHistory maxwell_solution(const SpectralField& E0, const SpectralField& B0,
                                const std::vector<ExpForcing>& forcing, const std::vector<double>& times) {
  check_times(times);
  const Grid& g = E0.grid();
  if (!same_grid(B0.grid(), g)) throw InvalidArgument("E/B grid mismatch");
  const cplx I(0.0, 1.0);
  std::vector<SpectralField> WE, WB;
  std::vector<double> rates;
  for (const auto& term : forcing) {
    if (!same_grid(term.profile.grid(), g)) throw InvalidArgument("forcing grid mismatch");
    const double b = term.rate;
    if (!(b >= 0.0)) throw InvalidArgument("forcing rate must be >= 0");
    if (std::abs(1.0 - b) < 1e-9) throw InvalidArgument("forcing rate 1 resonates with the damping");
    SpectralField we(E0.grid_ptr()), wb(E0.grid_ptr());
    for (std::size_t m = 0; m < g.size(); ++m) {
      const auto gv = term.profile.mode(m);
      const double kk = g.ksq(m);
      if (kk == 0.0) {
        for (int c = 0; c < 3; ++c) we.at(c, m) = gv[c] / (1.0 - b);
        continue;
      }
      const Vec3& k = g.k(m);
      const cplx kg = k[0] * gv[0] + k[1] * gv[1] + k[2] * gv[2];
      std::array<cplx, 3> par, perp;
      for (int c = 0; c < 3; ++c) {
        par[c] = k[c] * kg / kk;
        perp[c] = gv[c] - par[c];
      }
      const double D = b * b - b + kk;
      if (std::abs(D) < 1e-12 * std::max(1.0, kk)) throw InvalidArgument("forcing rate resonates with a mode");
      const std::array<cplx, 3> curl{I * (k[1] * gv[2] - k[2] * gv[1]), I * (k[2] * gv[0] - k[0] * gv[2]),
                                     I * (k[0] * gv[1] - k[1] * gv[0])};
      for (int c = 0; c < 3; ++c) {
        we.at(c, m) = -b * perp[c] / D + par[c] / (1.0 - b);
        wb.at(c, m) = -curl[c] / D;
      }
    }
    WE.push_back(std::move(we));
    WB.push_back(std::move(wb));
    rates.push_back(b);
  }
  SpectralField e_hom = E0, b_hom = B0;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    e_hom -= WE[i];
    b_hom -= WB[i];
  }
  MaxwellHistory h;
  h.E.times = times;
  h.B.times = times;
  for (double t : times) {
    auto [e, b] = maxwell_apply(e_hom, b_hom, t);
    for (std::size_t i = 0; i < rates.size(); ++i) {
      const double s = std::exp(-rates[i] * t);
      e.axpy(s, WE[i]);
      b.axpy(s, WB[i]);
    }
    h.E.samples.push_back(std::move(e));
    h.B.samples.push_back(std::move(b));
  }
  return h;
}

}  // namespace nsm::harness
