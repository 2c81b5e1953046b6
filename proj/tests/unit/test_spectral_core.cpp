// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "nsm/error.hpp"
#include "nsm/reduce.hpp"
#include "nsm/snapshot.hpp"
#include "test_util.hpp"

namespace nsm {
namespace {

using testing::random_field;
using testing::rel_diff;

constexpr double kPi = std::numbers::pi;

TEST(Grid, RejectsInvalidParameters) {
  EXPECT_THROW(Grid::create(1, 16, 1.0), InvalidArgument);
  EXPECT_THROW(Grid::create(4, 16, 1.0), InvalidArgument);
  EXPECT_THROW(Grid::create(2, 4, 1.0), InvalidArgument);
  EXPECT_THROW(Grid::create(2, 24, 1.0), InvalidArgument);
  EXPECT_THROW(Grid::create(2, 16, 0.0), InvalidArgument);
  EXPECT_THROW(Grid::create(2, 16, -1.0), InvalidArgument);
  EXPECT_NO_THROW(Grid::create(3, 8, 2.0));
}

TEST(Grid, WavenumbersAndFlags) {
  const auto g = Grid::create(2, 16, 4.0 * kPi);
  EXPECT_DOUBLE_EQ(g->k_unit(), 0.5);
  const std::size_t m = g->index_of({3, -2, 0});
  EXPECT_EQ(g->m(m)[0], 3);
  EXPECT_EQ(g->m(m)[1], -2);
  EXPECT_DOUBLE_EQ(g->k(m)[1], -1.0);
  EXPECT_DOUBLE_EQ(g->k(m)[2], 0.0);
  EXPECT_TRUE(g->nyquist(g->index_of({8, 0, 0})));
  EXPECT_FALSE(g->resolved(g->index_of({8, 0, 0})));
  EXPECT_TRUE(g->resolved(g->index_of({5, -5, 0})));
  EXPECT_FALSE(g->resolved(g->index_of({6, 0, 0})));
  EXPECT_EQ(g->conj_index(m), g->index_of({-3, 2, 0}));
}

TEST(Transforms, SpectralRoundTrip) {
  for (int d : {2, 3}) {
    const auto g = Grid::create(d, d == 2 ? 32 : 16, 2.0 * kPi);
    SpectralField f(g);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal;
    for (std::size_t m = 0; m < g->size(); ++m) {
      for (int c = 0; c < 3; ++c) f.at(c, m) = cplx(normal(rng), normal(rng));
    }
    f.enforce_reality();
    const SpectralField back = SpectralField::from_physical(f.to_physical());
    EXPECT_LT(rel_diff(f, back), 1e-13) << "d=" << d;
  }
}

TEST(Transforms, PhysicalSamplesMatchAnalyticFunction) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const SpectralField f = SpectralField::from_function(g, [](const Vec3& x) {
    return Vec3{std::sin(x[0]) * std::cos(2.0 * x[1]), 1.0, 0.0};
  });
  const std::size_t m = g->index_of({1, 2, 0});
  EXPECT_NEAR(f.at(0, m).imag(), -0.25, 1e-15);
  EXPECT_NEAR(f.at(1, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(f.hermitian_defect(), 0.0, 1e-16);
}

TEST(Transforms, FromPhysicalZeroesNyquist) {
  const auto g = Grid::create(2, 8, 2.0 * kPi);
  const SpectralField f = SpectralField::from_function(g, [](const Vec3& x) {
    return Vec3{std::cos(4.0 * x[0]), 0.0, 0.0};
  });
  EXPECT_EQ(f.max_abs(), 0.0);
}

TEST(Operators, GradientMatchesAnalyticDerivative) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const SpectralField f = SpectralField::from_function(g, [](const Vec3& x) {
    return Vec3{std::sin(x[0]) * std::cos(2.0 * x[1]), 0.0, 0.0};
  });
  const SpectralField grad = apply_diff(f, VectorOp::gradient);
  const SpectralField expected = SpectralField::from_function(g, [](const Vec3& x) {
    return Vec3{std::cos(x[0]) * std::cos(2.0 * x[1]), -2.0 * std::sin(x[0]) * std::sin(2.0 * x[1]), 0.0};
  });
  EXPECT_LT(rel_diff(grad, expected), 1e-13);
}

TEST(Operators, PlanarCurlConvention) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  // F = (0, 0, psi) with psi = sin(x1) sin(x2): curl F = (d2 psi, -d1 psi, 0).
  const SpectralField f = SpectralField::from_function(g, [](const Vec3& x) {
    return Vec3{0.0, 0.0, std::sin(x[0]) * std::sin(x[1])};
  });
  const SpectralField expected = SpectralField::from_function(g, [](const Vec3& x) {
    return Vec3{std::sin(x[0]) * std::cos(x[1]), -std::cos(x[0]) * std::sin(x[1]), 0.0};
  });
  EXPECT_LT(rel_diff(apply_diff(f, VectorOp::curl), expected), 1e-14);
}

TEST(Operators, DivergenceOfLerayProjectionVanishes) {
  for (int d : {2, 3}) {
    const auto g = Grid::create(d, d == 2 ? 64 : 16, 2.0 * kPi);
    const SpectralField f = random_field(g, 11 + d);
    const SpectralField p = leray_project(f);
    EXPECT_LT(divergence_norm(p), 1e-12 * l2_norm(f)) << "d=" << d;
    EXPECT_LT(rel_diff(leray_project(p), p), 1e-14);
  }
}

TEST(Operators, CurlOfGradientVanishes) {
  for (int d : {2, 3}) {
    const auto g = Grid::create(d, d == 2 ? 64 : 16, 2.0 * kPi);
    SpectralField s = random_field(g, 3);
    for (int c = 1; c < 3; ++c) {
      for (auto& z : s.component(c)) z = 0.0;
    }
    const SpectralField grad = apply_diff(s, VectorOp::gradient);
    EXPECT_LT(apply_diff(grad, VectorOp::curl).max_abs(), 1e-12 * grad.max_abs()) << "d=" << d;
  }
}

TEST(Operators, GradientRejectsVectorInput) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  EXPECT_THROW(apply_diff(random_field(g, 1), VectorOp::gradient), InvalidArgument);
}

TEST(Operators, LaplacianIsMinusKSquared) {
  const auto g = Grid::create(3, 16, 2.0 * kPi);
  const SpectralField f = random_field(g, 5);
  const SpectralField lap = apply_diff(f, VectorOp::laplacian);
  for (std::size_t m = 0; m < g->size(); ++m) {
    EXPECT_EQ(lap.at(1, m), -g->ksq(m) * f.at(1, m));
  }
}

TEST(Products, CrossProductWithItselfVanishes) {
  const auto g = Grid::create(3, 16, 2.0 * kPi);
  const SpectralField a = random_field(g, 9);
  EXPECT_LT(l2_norm(pointwise_product(a, a, Combiner::cross)), 1e-13 * l2_norm(a));
}

// Oracle: the same product on a grid twice as fine, where the product of two
// 2/3-truncated fields is alias free, restricted back to the resolved modes.
TEST(Products, DealiasedProductMatchesDoubleResolution) {
  for (Combiner comb : {Combiner::scalar, Combiner::cross, Combiner::advection}) {
    const auto g = Grid::create(2, 32, 2.0 * kPi);
    const auto g2 = Grid::create(2, 64, 2.0 * kPi);
    const SpectralField a = random_field(g, 21);
    const SpectralField b = random_field(g, 22);
    auto lift = [&](const SpectralField& f) {
      SpectralField out(g2);
      for (std::size_t m = 0; m < g->size(); ++m) {
        const std::size_t m2 = g2->index_of(g->m(m));
        for (int c = 0; c < 3; ++c) out.at(c, m2) = f.at(c, m);
      }
      return out;
    };
    const SpectralField fine = pointwise_product(lift(a), lift(b), comb);
    const SpectralField coarse = pointwise_product(a, b, comb);
    SpectralField restricted(g);
    for (std::size_t m = 0; m < g->size(); ++m) {
      if (!g->resolved(m)) continue;
      const std::size_t m2 = g2->index_of(g->m(m));
      for (int c = 0; c < 3; ++c) restricted.at(c, m) = fine.at(c, m2);
    }
    EXPECT_LT(rel_diff(coarse, restricted), 1e-12) << static_cast<int>(comb);
  }
}

TEST(Products, AdvectionOfConstantFieldIsDirectionalDerivative) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const SpectralField a = SpectralField::from_function(g, [](const Vec3&) { return Vec3{2.0, 0.0, 0.0}; });
  const SpectralField b = SpectralField::from_function(g, [](const Vec3& x) {
    return Vec3{std::sin(x[0]), 0.0, std::cos(x[0] + x[1])};
  });
  const SpectralField expected = SpectralField::from_function(g, [](const Vec3& x) {
    return Vec3{2.0 * std::cos(x[0]), 0.0, -2.0 * std::sin(x[0] + x[1])};
  });
  EXPECT_LT(rel_diff(pointwise_product(a, b, Combiner::advection), expected), 1e-14);
}

TEST(Norms, ParsevalMatchesDirectQuadrature) {
  for (int d : {2, 3}) {
    const auto g = Grid::create(d, d == 2 ? 64 : 16, 3.0);
    const SpectralField f = random_field(g, 31);
    const PhysicalField p = f.to_physical();
    std::vector<double> sq(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
      sq[j] = p.comp[0][j] * p.comp[0][j] + p.comp[1][j] * p.comp[1][j] + p.comp[2][j] * p.comp[2][j];
    }
    const double direct = std::sqrt(pairwise_sum(sq) * g->volume() / static_cast<double>(g->size()));
    EXPECT_NEAR(l2_norm(f) / direct, 1.0, 1e-12) << "d=" << d;
  }
}

TEST(Norms, LinfIsMaxEuclideanNorm) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const SpectralField f = SpectralField::from_function(g, [](const Vec3& x) {
    return Vec3{3.0 * std::cos(x[0]), 4.0 * std::cos(x[0]), 0.0};
  });
  EXPECT_NEAR(linf_norm(f), 5.0, 1e-14);
  EXPECT_NEAR(l2_norm(f), 5.0 * std::sqrt(0.5) * 2.0 * kPi, 1e-12);
}

TEST(Reduce, PairwiseSumIsOrderFixedAndAccurate) {
  std::vector<double> x(100000, 0.1);
  const double s = pairwise_sum(x);
  EXPECT_NEAR(s, 10000.0, 1e-9);
  EXPECT_EQ(s, pairwise_sum(x));
}

TEST(Snapshot, RoundTripIsBitExact) {
  const auto g = Grid::create(3, 8, 1.5);
  const SpectralField f = random_field(g, 41);
  std::stringstream buf;
  write_snapshot(buf, f, 0.25);
  const std::string bytes = buf.str();
  EXPECT_EQ(bytes.substr(0, 4), "NSMW");
  EXPECT_EQ(bytes.size(), 4 + 3 * 4 + 2 * 8 + 3 * g->size() * 16);
  const Snapshot snap = read_snapshot(buf);
  EXPECT_EQ(snap.time, 0.25);
  EXPECT_TRUE(same_grid(snap.field.grid(), *g));
  for (std::size_t i = 0; i < f.data().size(); ++i) EXPECT_EQ(f.data()[i], snap.field.data()[i]);
}

TEST(Snapshot, RejectsUnknownVersionAndTruncation) {
  const auto g = Grid::create(2, 8, 1.0);
  std::stringstream buf;
  write_snapshot(buf, random_field(g, 1), 0.0);
  std::string bytes = buf.str();

  std::string bad_version = bytes;
  bad_version[4] = 2;
  std::stringstream s1(bad_version);
  EXPECT_THROW(read_snapshot(s1), FormatError);

  std::stringstream s2(bytes.substr(0, bytes.size() - 5));
  EXPECT_THROW(read_snapshot(s2), FormatError);

  std::stringstream s3("NOPE");
  EXPECT_THROW(read_snapshot(s3), FormatError);

  std::stringstream s4(bytes);
  EXPECT_THROW(read_snapshot(s4, Grid::create(2, 16, 1.0)), FormatError);
}

}  // namespace
}  // namespace nsm
