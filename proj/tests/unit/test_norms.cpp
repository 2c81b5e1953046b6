// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numbers>

#include "nsm/error.hpp"
#include "nsm/norms.hpp"
#include "test_util.hpp"

namespace nsm {
namespace {

using testing::random_field;

constexpr double kPi = std::numbers::pi;

TEST(Hst, SingleShellFormula) {
  // amplitudes indexed from q_min = -1: a_3 = 1
  std::vector<double> a(6, 0.0);
  a[4] = 1.0;
  EXPECT_NEAR(combine_shells(a, -1, NormSpec::hst(0.7, 0.5, 1.0)), std::sqrt(24.0), 1e-14);
  // q <= 0 uses s only
  std::vector<double> b(6, 0.0);
  b[0] = 2.0;
  EXPECT_NEAR(combine_shells(b, -1, NormSpec::hst(1.0, 9.0, 3.0)), 1.0, 1e-15);
}

TEST(Hst, RejectsNegativeAlpha) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const DyadicPartition part(g);
  EXPECT_THROW(norm_hst(random_field(g, 1), part, NormSpec::hst(0.0, 0.0, -1.0)), InvalidArgument);
}

TEST(Hst, ZeroFieldHasZeroNorm) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const DyadicPartition part(g);
  EXPECT_EQ(norm_hst(SpectralField(g), part, NormSpec::sobolev(1.0)), 0.0);
}

TEST(Hst, ComparableToDirectSobolevSum) {
  const auto g = Grid::create(2, 64, 2.0 * kPi);
  const DyadicPartition part(g);
  for (double s : {-0.5, 0.0, 1.0}) {
    double lo = 1e300, hi = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SpectralField f = random_field(g, seed);
      double direct = 0.0;
      for (std::size_t m = 1; m < g->size(); ++m) {
        const auto v = f.mode(m);
        direct += std::pow(g->ksq(m), s) * (std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
      }
      direct = std::sqrt(direct * g->volume());
      const double r = norm_hst(f, part, NormSpec::sobolev(s)) / direct;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    EXPECT_GT(lo, 0.5) << s;
    EXPECT_LT(hi, 2.0) << s;
  }
}

TEST(Besov, TwoTwoMatchesSobolev) {
  const auto g = Grid::create(3, 16, 2.0 * kPi);
  const DyadicPartition part(g);
  const SpectralField f = random_field(g, 4);
  EXPECT_NEAR(norm_besov(f, part, 0.5, 2.0, 2.0) / norm_hst(f, part, NormSpec::sobolev(0.5)), 1.0, 1e-14);
}

TEST(Besov, SupportedExponents) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const DyadicPartition part(g);
  const SpectralField f = random_field(g, 2);
  EXPECT_THROW(norm_besov(f, part, 0.0, 1.0, 2.0), InvalidArgument);
  EXPECT_THROW(norm_besov(f, part, 0.0, 2.0, 3.0), InvalidArgument);
  const double r1 = norm_besov(f, part, 0.0, kInf, 1.0);
  const double r2 = norm_besov(f, part, 0.0, kInf, 2.0);
  const double ri = norm_besov(f, part, 0.0, kInf, kInf);
  EXPECT_GE(r1, r2);
  EXPECT_GE(r2, ri);
}

TEST(Besov, CriticalBesovDominatesLinf) {
  const auto g = Grid::create(2, 64, 2.0 * kPi);
  const DyadicPartition part(g);
  double min_ratio = 1e300;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SpectralField f = random_field(g, seed);
    min_ratio = std::min(min_ratio, norm_besov(f, part, 1.0, 2.0, 1.0) / linf_norm(f));
  }
  EXPECT_GT(min_ratio, 0.1);
}

FieldHistory constant_history(const SpectralField& f, int samples) {
  FieldHistory h;
  for (int i = 0; i < samples; ++i) {
    h.times.push_back(0.1 * i);
    h.samples.push_back(f);
  }
  return h;
}

TEST(SpaceTime, ConstantInTimeInfinityNorms) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const DyadicPartition part(g);
  const SpectralField f = random_field(g, 6);
  const FieldHistory h = constant_history(f, 5);
  const NormSpec spec = NormSpec::hst(0.0, 0.0, 1.0);
  const double stat = norm_hst(f, part, spec);
  EXPECT_NEAR(spacetime_norm(h, part, spec.in_time(kInf, true)), stat, 1e-15 * stat);
  EXPECT_NEAR(spacetime_norm(h, part, spec.in_time(kInf, false)), stat, 1e-15 * stat);
  // L^2 over [0, 0.4] of a constant
  EXPECT_NEAR(spacetime_norm(h, part, spec.in_time(2.0, true)), stat * std::sqrt(0.4), 1e-14 * stat);
  EXPECT_NEAR(spacetime_norm(h, part, spec.in_time(1.0, false)), stat * 0.4, 1e-14 * stat);
}

TEST(SpaceTime, PlainInfinityNormBelowTilde) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const DyadicPartition part(g);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    FieldHistory h;
    for (int i = 0; i < 6; ++i) {
      h.times.push_back(i);
      h.samples.push_back(random_field(g, 1000 * seed + i));
    }
    const NormSpec spec = NormSpec::sobolev(0.5);
    EXPECT_LE(spacetime_norm(h, part, spec.in_time(kInf, false)),
              spacetime_norm(h, part, spec.in_time(kInf, true)));
    // r' = 2 with l^2 summation: tilde and plain agree.
    EXPECT_NEAR(spacetime_norm(h, part, spec.in_time(2.0, false)),
                spacetime_norm(h, part, spec.in_time(2.0, true)),
                1e-13 * spacetime_norm(h, part, spec.in_time(2.0, true)));
  }
}

TEST(SpaceTime, SingleShellTildeEqualsPlain) {
  const auto g = Grid::create(2, 64, 2.0 * kPi);
  const DyadicPartition part(g);
  SpectralField base(g);
  // |k| = 3 lies only in shell 1 and shell 0 ends at 8/3 < 3.
  const std::size_t m = g->index_of({3, 0, 0});
  base.at(1, m) = 1.0;
  base.at(1, g->conj_index(m)) = 1.0;
  FieldHistory h;
  for (int i = 0; i < 5; ++i) {
    h.times.push_back(0.5 * i);
    h.samples.push_back(double(i * i + 1) * base);
  }
  const NormSpec spec = NormSpec::hst(0.0, 0.5, 1.0);
  for (double r : {1.0, 2.0, kInf}) {
    const double a = spacetime_norm(h, part, spec.in_time(r, true));
    const double b = spacetime_norm(h, part, spec.in_time(r, false));
    EXPECT_NEAR(a, b, 1e-14 * a) << r;
  }
}

TEST(SpaceTime, ErrorsOnBadHistories) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const DyadicPartition part(g);
  FieldHistory empty;
  EXPECT_THROW(spacetime_norm(empty, part, NormSpec::sobolev(0.0)), InvalidArgument);
  const FieldHistory one = constant_history(random_field(g, 1), 1);
  EXPECT_THROW(spacetime_norm(one, part, NormSpec::sobolev(0.0).in_time(2.0, false)), InvalidArgument);
  EXPECT_THROW(time_norm({0.0, 0.0}, {1.0, 1.0}, 1.0), InvalidArgument);
}

TEST(NormSpec, Names) {
  EXPECT_EQ(NormSpec::sobolev_log(0.0).name(), "H^{0,0}_1");
  EXPECT_EQ(NormSpec::besov(-1.0, 2.0, 1.0).in_time(2.0, true).name(), "Lt2_T B^-1_{2,1}");
}

}  // namespace
}  // namespace nsm
