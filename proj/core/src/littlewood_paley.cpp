// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/littlewood_paley.hpp"

#include <cmath>

#include "nsm/error.hpp"
#include "nsm/reduce.hpp"

namespace nsm {

namespace {

constexpr double kInner = 0.75;
constexpr double kOuter = 4.0 / 3.0;

double smooth_step_kernel(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

}  // namespace

double lp_chi(double r) {
  if (r <= kInner) return 1.0;
  if (r >= kOuter) return 0.0;
  const double x = (r - kInner) / (kOuter - kInner);
  const double a = smooth_step_kernel(1.0 - x);
  const double b = smooth_step_kernel(x);
  return a / (a + b);
}

double lp_phi(double r) { return lp_chi(0.5 * r) - lp_chi(r); }

DyadicPartition::DyadicPartition(GridPtr grid) : grid_(std::move(grid)) {
  const Grid& g = *grid_;
  // Lowest shell whose support reaches k_min; highest shell whose support
  // starts at or below k_max.
  int q = -64;
  while (std::ldexp(8.0 / 3.0, q) < g.k_min()) ++q;
  q_min_ = q;
  q = q_min_;
  while (std::ldexp(0.75, q + 1) <= g.k_max()) ++q;
  q_max_ = q;
  if (q_max_ - q_min_ < 2) {
    throw InvalidArgument("grid too small to host two disjoint dyadic shells");
  }
  if (q_max_ - q_min_ > 120) throw InvalidArgument("too many dyadic shells");

  lo_.assign(g.size(), -1);
  w0_.assign(g.size(), 0.0);
  w1_.assign(g.size(), 0.0);
  for (std::size_t m = 1; m < g.size(); ++m) {
    if (g.nyquist(m)) continue;
    const double kabs = std::sqrt(g.ksq(m));
    int found = 0;
    for (int s = q_min_; s <= q_max_; ++s) {
      double w;
      if (s == q_min_) {
        w = lp_chi(std::ldexp(kabs, -(s + 1)));
      } else if (s == q_max_) {
        w = 1.0 - lp_chi(std::ldexp(kabs, -s));
      } else {
        w = lp_phi(std::ldexp(kabs, -s));
      }
      if (w == 0.0) continue;
      if (found == 0) {
        lo_[m] = static_cast<std::int8_t>(s - q_min_);
        w0_[m] = w;
      } else if (found == 1 && s == q_min_ + lo_[m] + 1) {
        w1_[m] = w;
      } else {
        throw std::logic_error("dyadic shells overlap beyond neighbours");
      }
      ++found;
    }
  }
}

double DyadicPartition::weight(int q, std::size_t mode) const {
  const int lo = lo_[mode];
  if (lo < 0) return 0.0;
  const int rel = q - q_min_;
  if (rel == lo) return w0_[mode];
  if (rel == lo + 1) return w1_[mode];
  return 0.0;
}

double DyadicPartition::natural_weight(int q, std::size_t mode) const {
  return lp_phi(std::ldexp(std::sqrt(grid_->ksq(mode)), -q));
}

SpectralField block(const SpectralField& u, const DyadicPartition& part, int q) {
  if (q < part.q_min() || q > part.q_max()) throw InvalidArgument("shell index out of range");
  if (!same_grid(u.grid(), part.grid())) throw InvalidArgument("partition built for another grid");
  SpectralField out(u.grid_ptr());
  for (std::size_t m = 0; m < u.modes(); ++m) {
    const double w = part.weight(q, m);
    if (w == 0.0) continue;
    for (int c = 0; c < 3; ++c) out.at(c, m) = w * u.at(c, m);
  }
  return out;
}

SpectralField block_tilde(const SpectralField& u, const DyadicPartition& part, int q) {
  if (q < part.q_min() || q > part.q_max()) throw InvalidArgument("shell index out of range");
  SpectralField out(u.grid_ptr());
  for (std::size_t m = 0; m < u.modes(); ++m) {
    const double w = part.weight(q - 1, m) + part.weight(q, m) + part.weight(q + 1, m);
    if (w == 0.0) continue;
    for (int c = 0; c < 3; ++c) out.at(c, m) = w * u.at(c, m);
  }
  return out;
}

SpectralField low_pass(const SpectralField& u, const DyadicPartition& part, int q) {
  if (q > part.q_max() + 1) throw InvalidArgument("shell index out of range");
  if (!same_grid(u.grid(), part.grid())) throw InvalidArgument("partition built for another grid");
  SpectralField out(u.grid_ptr());
  for (int c = 0; c < 3; ++c) out.at(c, 0) = u.at(c, 0);
  for (std::size_t m = 1; m < u.modes(); ++m) {
    double w = 0.0;
    const int lo = part.lowest_shell(m);
    if (lo < part.q_min()) continue;
    if (lo <= q - 1) w += part.weight(lo, m);
    if (lo + 1 <= q - 1) w += part.weight(lo + 1, m);
    if (w == 0.0) continue;
    for (int c = 0; c < 3; ++c) out.at(c, m) = w * u.at(c, m);
  }
  return out;
}

std::vector<double> shell_l2(const SpectralField& u, const DyadicPartition& part) {
  const Grid& g = u.grid();
  if (!same_grid(g, part.grid())) throw InvalidArgument("partition built for another grid");
  const auto shells = static_cast<std::size_t>(part.shell_count());
  std::vector<std::vector<double>> terms(shells);
  for (std::size_t m = 1; m < g.size(); ++m) {
    const int lo = part.lowest_shell(m);
    if (lo < part.q_min()) continue;
    const auto v = u.mode(m);
    const double e = std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
    if (e == 0.0) continue;
    const double w0 = part.weight(lo, m);
    const double w1 = part.weight(lo + 1, m);
    terms[static_cast<std::size_t>(lo - part.q_min())].push_back(w0 * w0 * e);
    if (w1 != 0.0) terms[static_cast<std::size_t>(lo + 1 - part.q_min())].push_back(w1 * w1 * e);
  }
  std::vector<double> out(shells);
  for (std::size_t s = 0; s < shells; ++s) out[s] = std::sqrt(g.volume() * pairwise_sum(terms[s]));
  return out;
}

std::vector<double> shell_linf(const SpectralField& u, const DyadicPartition& part) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(part.shell_count()));
  for (int q = part.q_min(); q <= part.q_max(); ++q) out.push_back(linf_norm(block(u, part, q)));
  return out;
}

SpectralField BonyParts::sum() const {
  SpectralField s = low_high;
  s += high_low;
  s += remainder;
  return s;
}

namespace {

PhysicalField constant_physical(const GridPtr& g, const std::array<cplx, 3>& mean) {
  PhysicalField p(g);
  for (int c = 0; c < 3; ++c) p.comp[c].assign(g->size(), mean[c].real());
  return p;
}

void add_to(PhysicalField& acc, const PhysicalField& x) {
  for (int c = 0; c < 3; ++c) {
    for (std::size_t j = 0; j < acc.size(); ++j) acc.comp[c][j] += x.comp[c][j];
  }
}

}  // namespace

BonyParts bony_decompose(const SpectralField& u, const SpectralField& v, const DyadicPartition& part,
                         Combiner combiner) {
  if (!same_grid(u.grid(), v.grid()) || !same_grid(u.grid(), part.grid())) {
    throw InvalidArgument("paraproduct of fields on different grids");
  }
  if (combiner == Combiner::advection) throw InvalidArgument("paraproduct supports cross/scalar only");
  const GridPtr& gp = u.grid_ptr();
  SpectralField ut = u;
  SpectralField vt = v;
  ut.truncate();
  vt.truncate();

  const int qmin = part.q_min();
  const int qmax = part.q_max();
  std::vector<PhysicalField> bu;
  std::vector<PhysicalField> bv;
  for (int q = qmin; q <= qmax; ++q) {
    bu.push_back(block(ut, part, q).to_physical());
    bv.push_back(block(vt, part, q).to_physical());
  }
  auto at = [&](std::vector<PhysicalField>& b, int q) -> const PhysicalField* {
    if (q < qmin || q > qmax) return nullptr;
    return &b[static_cast<std::size_t>(q - qmin)];
  };

  PhysicalField low_high(gp), high_low(gp), rem(gp), tmp(gp);
  PhysicalField su = constant_physical(gp, ut.mean());
  PhysicalField sv = constant_physical(gp, vt.mean());
  combine_physical(su, sv, combiner, rem);

  for (int q = qmin; q <= qmax; ++q) {
    // S_{q-1} = mean + sum_{j <= q-2} Delta_j
    if (const PhysicalField* b = at(bu, q - 2)) add_to(su, *b);
    if (const PhysicalField* b = at(bv, q - 2)) add_to(sv, *b);
    const PhysicalField& du = *at(bu, q);
    const PhysicalField& dv = *at(bv, q);

    combine_physical(su, dv, combiner, tmp);
    add_to(low_high, tmp);
    combine_physical(du, sv, combiner, tmp);
    add_to(high_low, tmp);

    PhysicalField dv_tilde = dv;
    if (const PhysicalField* b = at(bv, q - 1)) add_to(dv_tilde, *b);
    if (const PhysicalField* b = at(bv, q + 1)) add_to(dv_tilde, *b);
    combine_physical(du, dv_tilde, combiner, tmp);
    add_to(rem, tmp);
  }

  auto finish = [](const PhysicalField& p) {
    SpectralField s = SpectralField::from_physical(p);
    s.truncate();
    return s;
  };
  return {finish(low_high), finish(high_low), finish(rem)};
}

}  // namespace nsm
