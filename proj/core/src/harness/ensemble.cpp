// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/harness/ensemble.hpp"

#include <cmath>
#include <map>
#include <random>

#include "nsm/error.hpp"
#include "nsm/littlewood_paley.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm::harness {

namespace {

void validate(const FieldEnsembleSpec& spec) {
  if (!spec.grid) throw InvalidArgument("ensemble needs a grid");
  if (spec.count <= 0) throw InvalidArgument("ensemble count must be positive");
  if (!std::isfinite(spec.slope)) throw InvalidArgument("ensemble slope must be finite");
}

}  // namespace

SpectralField ensemble_member(const FieldEnsembleSpec& spec, int index) {
  validate(spec);
  if (index < 0 || index >= spec.count) throw InvalidArgument("ensemble index out of range");
  const Grid& g = *spec.grid;
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;

  SpectralField f(spec.grid);
  for (int c = 0; c < 3; ++c) {
    auto comp = f.component(c);
    for (std::size_t m = 0; m < g.size(); ++m) {
      const double re = normal(rng);
      const double im = normal(rng);
      if (m == 0 || !g.resolved(m)) continue;
      comp[m] = cplx(re, im) * std::pow(std::sqrt(g.ksq(m)), -spec.slope);
    }
  }
  f.enforce_reality();
  f.truncate();
  f.remove_mean();
  if (spec.shell) f = block(f, DyadicPartition(spec.grid), *spec.shell);
  if (spec.div_free) f = leray_project(f);
  return f;
}

std::vector<SpectralField> gen_ensemble(const FieldEnsembleSpec& spec) {
  validate(spec);
  std::vector<SpectralField> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) out.push_back(ensemble_member(spec, i));
  return out;
}

double fit_spectral_slope(const SpectralField& f) {
  const Grid& g = f.grid();
  std::map<long, std::pair<double, long>> bins;
  for (std::size_t m = 1; m < g.size(); ++m) {
    if (!g.resolved(m)) continue;
    double p = 0.0;
    for (int c = 0; c < 3; ++c) p += std::norm(f.at(c, m));
    const auto& mm = g.m(m);
    const double r = std::sqrt(double(mm[0]) * mm[0] + double(mm[1]) * mm[1] + double(mm[2]) * mm[2]);
    auto& b = bins[std::lround(r)];
    b.first += p;
    b.second += 1;
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, n = 0.0;
  for (const auto& [r, b] : bins) {
    if (r == 0 || b.first <= 0.0) continue;
    const double x = std::log(static_cast<double>(r) * g.k_unit());
    const double y = std::log(b.first / static_cast<double>(b.second));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    n += 1.0;
  }
  if (n < 2.0) throw InvalidArgument("slope fit needs at least two nonempty bins");
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return -0.5 * slope;
}

SpectralField shell_packet(const GridPtr& grid, int q, const Vec3& dir, const Vec3& center, bool div_free) {
  const DyadicPartition part(grid);
  if (q < part.q_min() || q > part.q_max()) throw InvalidArgument("shell out of range");
  const Grid& g = *grid;
  SpectralField f(grid);
  for (std::size_t m = 1; m < g.size(); ++m) {
    if (!g.resolved(m)) continue;
    const double w = part.weight(q, m);
    if (w == 0.0) continue;
    const Vec3& k = g.k(m);
    const double phase = -(k[0] * center[0] + k[1] * center[1] + k[2] * center[2]);
    const cplx e = w * std::polar(1.0, phase);
    for (int c = 0; c < 3; ++c) f.at(c, m) = e * dir[c];
  }
  f.enforce_reality();
  if (div_free) f = leray_project(f);
  return f;
}

}  // namespace nsm::harness
