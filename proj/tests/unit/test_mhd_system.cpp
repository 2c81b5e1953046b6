// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numbers>

#include "nsm/error.hpp"
#include "nsm/mhd_system.hpp"
#include "nsm/picard.hpp"
#include "nsm/simulate.hpp"
#include "nsm/split.hpp"
#include "test_util.hpp"

namespace nsm {
namespace {

using testing::random_field;
using testing::rel_diff;

constexpr double kPi = std::numbers::pi;

SpectralField constant(const GridPtr& g, Vec3 c) {
  return SpectralField::from_function(g, [c](const Vec3&) { return c; });
}

SpectralField taylor_green(const GridPtr& g, double amp) {
  return SpectralField::from_function(g, [amp](const Vec3& x) {
    return Vec3{amp * std::sin(x[0]) * std::cos(x[1]), -amp * std::cos(x[0]) * std::sin(x[1]), 0.0};
  });
}

MhdState random_state(const GridPtr& g, std::uint64_t seed, double scale = 1.0) {
  MhdState s(random_field(g, seed, 2.0, true), random_field(g, seed + 1, 2.0),
             random_field(g, seed + 2, 2.0, true));
  s *= scale;
  return s;
}

TEST(Ohm, ConstantFields) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  MhdState s(constant(g, {1, 0, 0}), SpectralField(g), constant(g, {0, 0, 1}));
  const SpectralField j = ohm_current(s);
  EXPECT_NEAR(j.at(1, 0).real(), -1.0, 1e-15);
  EXPECT_NEAR(std::abs(j.at(0, 0)) + std::abs(j.at(2, 0)), 0.0, 1e-15);

  MhdState e_only(SpectralField(g), random_field(g, 2), random_field(g, 3, 1.5, true));
  MhdParams p;
  p.sigma = 2.5;
  EXPECT_LT(rel_diff(ohm_current(e_only, p), 2.5 * e_only.E), 1e-15);
  EXPECT_EQ(ohm_current(MhdState(g)).max_abs(), 0.0);
}

TEST(Nonlinearity, ZeroAndVelocityFreeCases) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const MhdState zero = nonlinearity(MhdState(g));
  for (int i = 0; i < 3; ++i) EXPECT_EQ(zero.slot(i).max_abs(), 0.0);

  MhdState s(SpectralField(g), random_field(g, 5), random_field(g, 6, 1.5, true));
  const MhdState n = nonlinearity(s);
  SpectralField expected = pointwise_product(s.E, s.B, Combiner::cross);
  expected.remove_mean();
  EXPECT_LT(rel_diff(n.v, leray_project(expected)), 1e-14);
  EXPECT_EQ(n.E.max_abs(), 0.0);
  EXPECT_EQ(n.B.max_abs(), 0.0);
}

TEST(Nonlinearity, AdvectionAndDivergenceFormsAgree) {
  for (int d : {2, 3}) {
    const auto g = Grid::create(d, d == 2 ? 64 : 16, 2.0 * kPi);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const SpectralField v = random_field(g, seed, 1.5, true);
      const SpectralField a = momentum_transport(v, MomentumForm::advection);
      const SpectralField b = momentum_transport(v, MomentumForm::divergence);
      EXPECT_LT(rel_diff(a, b), 1e-11);
    }
  }
}

TEST(Nonlinearity, RejectsCompressibleVelocity) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  MhdState s(g);
  s.v = random_field(g, 1);
  EXPECT_THROW(nonlinearity(s), InconsistentState);
}

TEST(Nonlinearity, EnergyNeutralityOfCouplingTerms) {
  // (v, N_v) + (E, N_E) = -2 (E, w) - ||w||^2 with w the dealiased v x B; adding
  // the damping term -||E||^2 gives -||j||^2.
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const MhdState s = random_state(g, 9);
  const MhdState n = nonlinearity(s);
  const SpectralField w = pointwise_product(s.v, s.B, Combiner::cross);
  const double lhs = inner(s.v, n.v) + inner(s.E, n.E);
  const double rhs = -2.0 * inner(s.E, w) - inner(w, w);
  EXPECT_NEAR(lhs, rhs, 1e-12 * (std::abs(rhs) + 1.0));
}

TEST(Energy, ReportExamples) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const EnergyReport z = energy_report(MhdState(g));
  EXPECT_EQ(z.energy, 0.0);
  EXPECT_EQ(z.grad_v_sq, 0.0);
  EXPECT_EQ(z.j_sq, 0.0);

  MhdState s(g);
  s.v = SpectralField::from_function(g, [](const Vec3& x) { return Vec3{0.0, 0.0, 3.0 * std::cos(x[0])}; });
  const EnergyReport r = energy_report(s);
  const double v2 = std::pow(l2_norm(s.v), 2);
  EXPECT_NEAR(r.energy, 0.5 * v2, 1e-12 * v2);
  EXPECT_NEAR(r.grad_v_sq, v2, 1e-12 * v2);
}

TEST(Pressure, GradientRemovesCompressiblePart) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const MhdState s = random_state(g, 12);
  SpectralField force = momentum_transport(s.v, MomentumForm::advection);
  force += lorentz_force(s);
  force.remove_mean();
  const SpectralField p = pressure(s);
  SpectralField projected = force;
  projected -= apply_diff(p, VectorOp::gradient);
  EXPECT_LT(rel_diff(projected, leray_project(force)), 1e-13);
}

TEST(Simulate, StepCountValidation) {
  EXPECT_EQ(step_count(1.0, 0.1), 10u);
  EXPECT_EQ(step_count(1.0, 1e-3), 1000u);
  EXPECT_THROW(step_count(1.0, 0.3), InvalidArgument);
  EXPECT_THROW(step_count(1.0, 0.0), InvalidArgument);
  EXPECT_THROW(step_count(0.1, 0.2), InvalidArgument);
}

TEST(Simulate, LinearModeMatchesClosedForm) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const MhdState s0 = random_state(g, 20);
  SimulationOptions opt;
  opt.linear = true;
  const Trajectory traj = simulate(s0, 1.0, 0.05, opt);
  ASSERT_EQ(traj.states.size(), 21u);
  ASSERT_EQ(traj.diagnostics.size(), 21u);
  for (const MhdState& s : traj.states) {
    const auto [e, b] = maxwell_apply(s0.E, s0.B, s.time);
    EXPECT_LT(rel_diff(s.v, heat_apply(s0.v, s.time)), 1e-10);
    EXPECT_LT(rel_diff(s.E, e), 1e-10);
    EXPECT_LT(rel_diff(s.B, b), 1e-10);
  }
}

TEST(Simulate, StrideKeepsFirstAndLast) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  SimulationOptions opt;
  opt.store_stride = 3;
  opt.linear = true;
  const Trajectory traj = simulate(random_state(g, 1), 1.0, 0.1, opt);
  ASSERT_EQ(traj.states.size(), 5u);
  EXPECT_DOUBLE_EQ(traj.states.back().time, 1.0);
  EXPECT_EQ(traj.diagnostics.size(), 11u);
}

TEST(Simulate, MaxwellSectorStaysQuietWithoutFields) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  MhdState s0(g);
  s0.v = taylor_green(g, 1.0);
  const Trajectory traj = simulate(s0, 0.5, 0.01);
  double prev = traj.diagnostics.front().energy.energy;
  for (const auto& d : traj.diagnostics) {
    EXPECT_LE(d.energy.energy, prev);
    prev = d.energy.energy;
  }
  for (const MhdState& s : traj.states) {
    EXPECT_EQ(s.E.max_abs(), 0.0);
    EXPECT_EQ(s.B.max_abs(), 0.0);
    EXPECT_LT(divergence_norm(s.v), 1e-12);
  }
  // Taylor-Green is a steady Euler flow: viscous decay e^{-2 t} per mode.
  EXPECT_LT(rel_diff(traj.states.back().v, heat_apply(s0.v, 0.5)), 1e-12);
}

TEST(Simulate, EnergyIdentityConvergesAtSecondOrder) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  MhdState s0 = random_state(g, 30, 0.5);
  s0.v += taylor_green(g, 1.0);
  std::vector<double> res;
  for (double dt : {0.02, 0.01, 0.005}) {
    res.push_back(energy_identity_residual(simulate(s0, 0.4, dt)));
  }
  const double order = std::log2(res[0] / res[2]) / 2.0;
  EXPECT_GE(order, 1.9);
  EXPECT_LT(res[2], 1e-4);
}

TEST(Simulate, DivergenceStaysSmall) {
  const auto g = Grid::create(3, 16, 2.0 * kPi);
  const Trajectory traj = simulate(random_state(g, 50), 0.2, 0.02);
  for (const MhdState& s : traj.states) EXPECT_LT(s.divergence_defect(), 1e-10);
}

TEST(ZNormTest, ZeroAndVelocityOnly) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const DyadicPartition part(g);
  std::vector<MhdState> states;
  for (int i = 0; i < 3; ++i) {
    states.emplace_back(g);
    states.back().time = i;
  }
  const ZNorm z0 = z_norm(states, part);
  EXPECT_EQ(z0.total, 0.0);
  for (auto& s : states) s.v = taylor_green(g, 1.0);
  const ZNorm z1 = z_norm(states, part);
  EXPECT_GT(z1.u, 0.0);
  EXPECT_EQ(z1.E, 0.0);
  EXPECT_EQ(z1.B, 0.0);
  EXPECT_DOUBLE_EQ(z1.total, z1.u);
}

// Static B in shell 2 only (|k| = 6 sits where phi(2^-2 .) = 1), unit L^2 norm,
// d = 2, alpha = 1, T = 1:
//   Lt^inf H^0_1 = sqrt(2^1 * 1) = sqrt(2),  L^2 H^{1,0}_1 = sqrt(2 * T) = sqrt(2).
TEST(ZNormTest, SingleShellMagneticRegression) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const DyadicPartition part(g);
  SpectralField b = SpectralField::from_function(g, [](const Vec3& x) { return Vec3{0.0, 0.0, std::cos(6 * x[0])}; });
  b *= 1.0 / l2_norm(b);
  std::vector<MhdState> states;
  for (int i = 0; i <= 4; ++i) {
    states.emplace_back(SpectralField(g), SpectralField(g), b, 0.25 * i);
  }
  const ZNorm z = z_norm(states, part);
  EXPECT_NEAR(z.B, 2.0 * std::sqrt(2.0), 1e-13);
}

TEST(Picard, ZeroDataHasNoRatios) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const PicardResult r = picard_iterate(MhdState(g), 0.1, 0.05);
  EXPECT_TRUE(r.ratios.empty());
  EXPECT_EQ(r.solution(2).v.max_abs(), 0.0);
  PicardOptions bad;
  bad.iterations = 1;
  EXPECT_THROW(picard_iterate(MhdState(g), 0.1, 0.05, bad), InvalidArgument);
}

TEST(Picard, ContractsAndMatchesTimeStepper) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const MhdState s0 = random_state(g, 60, 0.05);
  PicardOptions opt;
  opt.iterations = 30;
  const double dt = 0.02;
  const PicardResult r = picard_iterate(s0, 0.4, dt, opt);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.max_ratio(), 1.0);
  const Trajectory traj = simulate(s0, 0.4, dt);
  const MhdState a = r.solution(20);
  const MhdState& b = traj.states.back();
  for (int i = 0; i < 3; ++i) {
    SpectralField d = a.slot(i);
    d -= b.slot(i);
    EXPECT_LT(l2_norm(d), 10.0 * dt * dt * r.free_norm.total) << i;
  }
}

TEST(Picard, RatiosGrowWithDataSize) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  double prev = 0.0;
  for (double eps : {1e-3, 1e-2, 1e-1}) {
    PicardOptions opt;
    opt.iterations = 4;
    const PicardResult r = picard_iterate(random_state(g, 61, eps), 0.2, 0.02, opt);
    EXPECT_GT(r.max_ratio(), prev);
    prev = r.max_ratio();
  }
}

TEST(Split, Examples) {
  const auto g = Grid::create(2, 64, 2.0 * kPi);
  const DyadicPartition part(g);
  MhdState s = random_state(g, 70);
  s.E.at(0, 0) = 0.5;
  const double full = initial_data_norm(s, part);

  const SplitResult all = split_initial_data(s, 1.01 * full, part);
  EXPECT_EQ(all.Q, part.q_min());
  MhdState no_mean = s;
  no_mean.E.remove_mean();
  EXPECT_LT(rel_diff(all.small.E, no_mean.E), 1e-15);

  // Band-limited below shell 4: modes with |k| < 16, so Delta_q vanishes for q >= 5
  // while Delta_4 does not.
  MhdState band = s;
  for (int i = 0; i < 3; ++i) {
    for (std::size_t m = 0; m < g->size(); ++m) {
      if (g->ksq(m) >= 256.0) {
        for (int c = 0; c < 3; ++c) band.slot(i).at(c, m) = 0.0;
      }
    }
  }
  const SplitResult cut = split_initial_data(band, 1e-30, part);
  EXPECT_EQ(cut.Q, 5);
  EXPECT_EQ(cut.small_norm, 0.0);

  MhdState sum = cut.regular;
  sum += cut.small;
  for (int i = 0; i < 3; ++i) EXPECT_LT(rel_diff(sum.slot(i), band.slot(i)), 1e-15);

  const SplitResult sweep = split_initial_data(s, 1e-30, part);
  for (std::size_t i = 1; i < sweep.sweep.size(); ++i) EXPECT_LE(sweep.sweep[i], sweep.sweep[i - 1] * (1 + 1e-14));
  EXPECT_THROW(split_initial_data(s, 0.0, part), InvalidArgument);
}

}  // namespace
}  // namespace nsm
