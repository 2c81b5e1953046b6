// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nsm/error.hpp"
#include "nsm/harness/ensemble.hpp"
#include "nsm/harness/flows.hpp"
#include "nsm/harness/linear_checks.hpp"
#include "nsm/harness/product_laws.hpp"
#include "nsm/harness/radial.hpp"
#include "nsm/harness/report.hpp"
#include "nsm/littlewood_paley.hpp"
#include "nsm/propagators.hpp"
#include "nsm/spectral_ops.hpp"
#include "test_util.hpp"

namespace nsm::harness {
namespace {

using nsm::testing::rel_diff;

constexpr double kPi = std::numbers::pi;

SpectralField single_mode(const GridPtr& g, const std::array<int, 3>& m, const Vec3& amp) {
  SpectralField f(g);
  const std::size_t i = g->index_of(m);
  const std::size_t ic = g->conj_index(i);
  for (int c = 0; c < 3; ++c) {
    f.at(c, i) = amp[c];
    f.at(c, ic) = amp[c];
  }
  return f;
}

TEST(Ensemble, SeedIsReproducible) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const FieldEnsembleSpec spec{42, 3, 2.0, std::nullopt, true, g};
  const auto a = gen_ensemble(spec);
  const auto b = gen_ensemble(spec);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int c = 0; c < 3; ++c) {
      for (std::size_t m = 0; m < g->size(); ++m) ASSERT_EQ(a[i].at(c, m), b[i].at(c, m));
    }
  }
  EXPECT_GT(rel_diff(a[0], a[1]), 0.1);
  FieldEnsembleSpec other = spec;
  other.seed = 43;
  EXPECT_GT(rel_diff(gen_ensemble(other)[0], a[0]), 0.1);
}

TEST(Ensemble, DivergenceFreeAndSlope) {
  for (int d : {2, 3}) {
    const auto g = Grid::create(d, d == 2 ? 128 : 32, 2.0 * kPi);
    for (double slope : {1.0, 2.0}) {
      const FieldEnsembleSpec spec{7, 4, slope, std::nullopt, true, g};
      for (const auto& f : gen_ensemble(spec)) {
        EXPECT_LT(divergence_norm(f), 1e-12 * l2_norm(f));
        EXPECT_NEAR(fit_spectral_slope(f), slope, 0.2);
      }
    }
  }
}

TEST(Ensemble, ShellConcentration) {
  const auto g = Grid::create(2, 64, 2.0 * kPi);
  const DyadicPartition part(g);
  const FieldEnsembleSpec spec{3, 2, 2.0, 3, false, g};
  for (const auto& f : gen_ensemble(spec)) {
    EXPECT_GT(l2_norm(f), 0.0);
    for (int q = part.q_min(); q <= part.q_max(); ++q) {
      if (std::abs(q - 3) >= 2) EXPECT_LT(block(f, part, q).max_abs(), 1e-15 * f.max_abs()) << q;
    }
  }
}

TEST(Ensemble, ShellPacketIsRealAndDivergenceFree) {
  const auto g = Grid::create(2, 64, 2.0 * kPi);
  const SpectralField p = shell_packet(g, 2, {1.0, 0.0, 0.0}, {1.0, 2.0, 0.0}, true);
  EXPECT_GT(l2_norm(p), 0.0);
  EXPECT_LT(divergence_norm(p), 1e-12 * l2_norm(p));
  SpectralField r = p;
  r.enforce_reality();
  EXPECT_LT(rel_diff(r, p), 1e-15);
}

TEST(Report, StatisticsAndPass) {
  EXPECT_EQ(estimate_ratio(0.0, 0.0), 0.0);
  EXPECT_EQ(estimate_ratio(1.0, 0.0), kInf);
  const EstimateReport r = make_report("x", {1.0, 3.0, 0.0, 2.0}, {1.0, 1.0, 0.0, 4.0}, 3.0, 9, {{"T", 10.0}});
  EXPECT_EQ(r.max_ratio, 3.0);
  EXPECT_EQ(r.min_ratio, 0.0);
  EXPECT_EQ(r.median_ratio, 0.75);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.param("T"), 10.0);
  EXPECT_THROW(r.param("q"), InvalidArgument);
  EXPECT_FALSE(make_report("x", {3.1}, {1.0}, 3.0).pass);
  EXPECT_THROW(make_report("x", {-1.0}, {1.0}, 3.0), InvalidArgument);
  EXPECT_THROW(make_report("x", {1.0}, {1.0, 2.0}, 3.0), InvalidArgument);
}

TEST(Report, JsonAndCsv) {
  const EstimateReport r = make_report("bernstein", {2.0, 1.0}, {1.0, 0.0}, 5.0, 17, {{"q", 3}});
  const std::string line = to_json_line(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_NE(line.find("\"id\":\"bernstein\""), std::string::npos);
  EXPECT_NE(line.find("\"seed\":17"), std::string::npos);
  EXPECT_NE(line.find("\"inf\""), std::string::npos);
  std::ostringstream csv;
  write_summary_csv(csv, {r});
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "id,params,max_ratio,bound,pass");
  EXPECT_NE(csv.str().find("bernstein,\"q=3\""), std::string::npos);
}

TEST(Bernstein, ShellRatiosLieInSupportRange) {
  for (int d : {2, 3}) {
    const auto g = Grid::create(d, d == 2 ? 128 : 32, 2.0 * kPi);
    const FieldEnsembleSpec spec{11, 5, 2.0, std::nullopt, false, g};
    for (int q : {1, 2, 3}) {
      for (int k : {1, 2}) {
        const EstimateReport r = check_bernstein(spec, q, k, Lp::two);
        EXPECT_GE(r.min_ratio, std::pow(0.75, k) - 1e-12);
        EXPECT_LE(r.max_ratio, std::pow(8.0 / 3.0, k) + 1e-12);
      }
      const EstimateReport inf = check_bernstein(spec, q, 1, Lp::inf);
      EXPECT_GT(inf.min_ratio, 0.3);
      EXPECT_LT(inf.max_ratio, 8.0 / 3.0 * std::sqrt(d));
    }
  }
}

TEST(Bernstein, EmptyShellThrows) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const FieldEnsembleSpec spec{1, 2, 2.0, std::nullopt, false, g};
  EXPECT_THROW(check_bernstein(spec, 9, 1), InvalidArgument);
}

TEST(Bernstein, EmbeddingConstantStableInShell) {
  const auto g = Grid::create(2, 128, 2.0 * kPi);
  const FieldEnsembleSpec spec{5, 5, 1.0, std::nullopt, false, g};
  double first = 0.0, hi = 0.0;
  for (int q = 1; q <= 5; ++q) {
    const EstimateReport r = check_bernstein_embedding(spec, q);
    if (q == 1) first = r.max_ratio;
    hi = std::max(hi, r.max_ratio);
  }
  // Random phases sit below the extremal constant; it must not grow with q.
  EXPECT_LE(hi, first);
}

TEST(Flows, TimeNodes) {
  const auto t = time_nodes(100.0, 1e-2, 4, {1.0, 10.0, 3.3});
  EXPECT_EQ(t.front(), 0.0);
  EXPECT_EQ(t.back(), 100.0);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_GT(t[i], t[i - 1]);
  for (double x : {1.0, 10.0, 3.3}) EXPECT_NE(std::find(t.begin(), t.end(), x), t.end());
  EXPECT_THROW(time_nodes(1.0, 2.0, 4), InvalidArgument);
  EXPECT_THROW(time_nodes(1.0, 0.1, 4, {2.0}), InvalidArgument);
}

TEST(Flows, HeatDuhamelMatchesSteppedOracle) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const SpectralField u0 = nsm::testing::random_field(g, 21, 1.5, true);
  const SpectralField f = nsm::testing::random_field(g, 22, 1.5, true);
  const double rate = 0.7, T = 0.5;
  const FieldHistory h = heat_solution(u0, {{f, rate}}, {0.0, T});
  // Exact per-step weights for piecewise-linear forcing; second order in h.
  auto stepped = [&](int n) {
    SpectralField u = u0;
    const double dt = T / n;
    for (int s = 0; s < n; ++s) {
      SpectralField a = f, b = f;
      a *= std::exp(-rate * s * dt);
      b *= std::exp(-rate * (s + 1) * dt);
      u = heat_step(u, a, b, dt);
    }
    return u;
  };
  const double e1 = rel_diff(stepped(200), h.samples.back());
  const double e2 = rel_diff(stepped(400), h.samples.back());
  EXPECT_LT(e2, 1e-6);
  EXPECT_NEAR(std::log2(e1 / e2), 2.0, 0.1);
  EXPECT_LT(rel_diff(heat_solution(u0, {}, {0.0, T}).samples.back(), heat_apply(u0, T)), 1e-15);
}

// RK4 on E' = -E + i k x B + g e^{-bt}, B' = -i k x E.
std::pair<CVec3, CVec3> maxwell_rk4(const Vec3& k, CVec3 E, CVec3 B, const CVec3& g, double b, double T, int n) {
  const cplx I(0.0, 1.0);
  auto cross = [&](const CVec3& v) {
    return CVec3{I * (k[1] * v[2] - k[2] * v[1]), I * (k[2] * v[0] - k[0] * v[2]), I * (k[0] * v[1] - k[1] * v[0])};
  };
  auto rhs = [&](double t, const CVec3& e, const CVec3& bb, CVec3& de, CVec3& db) {
    const CVec3 cb = cross(bb), ce = cross(e);
    for (int c = 0; c < 3; ++c) {
      de[c] = -e[c] + cb[c] + g[c] * std::exp(-b * t);
      db[c] = -ce[c];
    }
  };
  const double h = T / n;
  for (int s = 0; s < n; ++s) {
    const double t = s * h;
    CVec3 k1e, k1b, k2e, k2b, k3e, k3b, k4e, k4b, te, tb;
    rhs(t, E, B, k1e, k1b);
    for (int c = 0; c < 3; ++c) te[c] = E[c] + 0.5 * h * k1e[c], tb[c] = B[c] + 0.5 * h * k1b[c];
    rhs(t + 0.5 * h, te, tb, k2e, k2b);
    for (int c = 0; c < 3; ++c) te[c] = E[c] + 0.5 * h * k2e[c], tb[c] = B[c] + 0.5 * h * k2b[c];
    rhs(t + 0.5 * h, te, tb, k3e, k3b);
    for (int c = 0; c < 3; ++c) te[c] = E[c] + h * k3e[c], tb[c] = B[c] + h * k3b[c];
    rhs(t + h, te, tb, k4e, k4b);
    for (int c = 0; c < 3; ++c) {
      E[c] += h / 6.0 * (k1e[c] + 2.0 * k2e[c] + 2.0 * k3e[c] + k4e[c]);
      B[c] += h / 6.0 * (k1b[c] + 2.0 * k2b[c] + 2.0 * k3b[c] + k4b[c]);
    }
  }
  return {E, B};
}

TEST(Flows, ForcedMaxwellMatchesRk4) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  for (double rate : {0.0, 0.3, 2.5}) {
    for (const std::array<int, 3>& m : {std::array<int, 3>{1, 0, 0}, {2, 3, 0}, {0, 0, 0}}) {
      const SpectralField E0 = single_mode(g, m, {0.3, -0.2, 0.5});
      const SpectralField B0 = m == std::array<int, 3>{0, 0, 0} ? SpectralField(g) : single_mode(g, m, {0.0, 0.0, 1.0});
      const SpectralField G = single_mode(g, m, {1.0, 0.4, -0.7});
      const double T = 2.0;
      const MaxwellHistory h = maxwell_solution(E0, B0, {{G, rate}}, {0.0, 0.5, T});
      const std::size_t i = g->index_of(m);
      const auto [e, b] = maxwell_rk4(g->k(i), E0.mode(i), B0.mode(i), G.mode(i), rate, T, 4000);
      const auto he = h.E.samples.back().mode(i), hb = h.B.samples.back().mode(i);
      for (int c = 0; c < 3; ++c) {
        EXPECT_NEAR(std::abs(he[c] - e[c]), 0.0, 1e-11) << rate << " " << c;
        EXPECT_NEAR(std::abs(hb[c] - b[c]), 0.0, 1e-11) << rate << " " << c;
      }
    }
  }
}

TEST(Flows, ResonantForcingThrows) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const SpectralField G = single_mode(g, {1, 0, 0}, {0.0, 1.0, 0.0});
  EXPECT_THROW(maxwell_solution(SpectralField(g), SpectralField(g), {{G, 1.0}}, {0.0, 1.0}), InvalidArgument);
}

TEST(Parabolic, SingleModeClosedForm) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const DyadicPartition part(g);
  const SpectralField u0 = single_mode(g, {0, 3, 0}, {1.0, 0.0, 0.0});
  const double T = 2.0, kk = 9.0;
  const auto times = time_nodes(T, 1e-5, 400);
  for (double s : {-1.0, 0.0, 0.5}) {
    const HeatProblem p{u0, {}, {}};
    const EstimateReport r = check_parabolic_smoothing(std::span(&p, 1), times, {s, 2.0, 1.0, 2.0});
    const double sup = norm_besov(u0, part, s, 2.0, 2.0);
    const double smooth = norm_besov(u0, part, s + 1.0, 2.0, 2.0) * std::sqrt(-std::expm1(-2.0 * kk * T) / (2.0 * kk));
    EXPECT_NEAR(r.lhs[0] / (sup + smooth), 1.0, 1e-5) << s;
    EXPECT_NEAR(r.rhs[0] / sup, 1.0, 1e-14);
  }
}

TEST(Parabolic, ConstantForcingRatioFinite) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const HeatProblem p{SpectralField(g), {{nsm::testing::random_field(g, 4, 2.0, true), 0.0}}, {}};
  const EstimateReport r = check_parabolic_smoothing(std::span(&p, 1), time_nodes(10.0, 1e-4, 20), {0.0, 2.0, 1.0, 2.0});
  EXPECT_GT(r.max_ratio, 0.0);
  EXPECT_TRUE(std::isfinite(r.max_ratio));
  EXPECT_THROW(check_parabolic_smoothing(std::span(&p, 1), {0.0, 1.0}, {0.0, 1.0, 2.0, 2.0}), InvalidArgument);
}

TEST(ZeroData, ChecksAreTrivial) {
  const auto g = Grid::create(2, 16, 2.0 * kPi);
  const std::vector<double> times{0.0, 0.5, 1.0};
  const HeatProblem heat{SpectralField(g), {}, {}};
  for (const EstimateReport& r : {check_l2linfty(std::span(&heat, 1), times, 1.0),
                                  check_parabolic_smoothing(std::span(&heat, 1), times, {}, 1.0)}) {
    EXPECT_EQ(r.lhs[0], 0.0);
    EXPECT_EQ(r.rhs[0], 0.0);
    EXPECT_TRUE(r.pass);
  }
  const MaxwellProblem mx{SpectralField(g), SpectralField(g), {}};
  const MaxwellReports m = check_maxwell_energy_decay(std::span(&mx, 1), times, 1.0, 1.0, 1.0);
  EXPECT_TRUE(m.energy.pass);
  EXPECT_TRUE(m.decay.pass);
  EXPECT_EQ(m.decay.lhs[0], 0.0);
}

TEST(Maxwell, LowShellDecayMatchesModeQuadrature) {
  // k = 1/16 sits in shell -4.
  const auto g = Grid::create(2, 8, 32.0 * kPi);
  const DyadicPartition part(g);
  const std::array<int, 3> m{1, 0, 0};
  const SpectralField B0 = single_mode(g, m, {0.0, 0.0, 1.0});
  const SpectralField E0 = single_mode(g, m, {0.0, 0.5, 0.0});
  const double T = 50.0;
  const MaxwellProblem p{E0, B0, {}};
  const MaxwellReports r = check_maxwell_energy_decay(std::span(&p, 1), time_nodes(T, 1e-4, 1500), 1.0);
  const NormSpec decay = NormSpec::hst(1.0, 0.0, 1.0);
  const std::size_t i = g->index_of(m);
  const double weight = spatial_norm(B0, part, decay) / std::sqrt(2.0);
  const Vec3 k = g->k(i);
  auto b_sq = [&](double t) {
    const auto eb = maxwell_mode_phi(k, E0.mode(i), B0.mode(i), t);
    double s = 0.0;
    for (int c = 0; c < 3; ++c) s += std::norm(eb.second[c]);
    return s;
  };
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(b_sq, 0.0, T, 15, 1e-13);
  EXPECT_NEAR(r.decay.lhs[0] / (weight * std::sqrt(2.0 * integral)), 1.0, 1e-6);
  EXPECT_TRUE(std::isfinite(r.decay.max_ratio));
}

TEST(Maxwell, ForcedRatioFiniteAndSettles) {
  const auto g = Grid::create(2, 32, 2.0 * kPi);
  const MaxwellProblem p{SpectralField(g), SpectralField(g),
                         {{shell_packet(g, 1, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, true), 0.5}}};
  const std::vector<double> horizons{10.0, 30.0, 100.0};
  const auto reps = check_maxwell_sweep(std::span(&p, 1), time_nodes(100.0, 1e-4, 20, horizons), 1.0, horizons);
  std::vector<double> ratios;
  for (const auto& r : reps) {
    EXPECT_TRUE(std::isfinite(r.decay.max_ratio));
    ratios.push_back(r.decay.max_ratio);
  }
  EXPECT_LT(sweep_drift(horizons, ratios).variation, 0.1);
}

TEST(SweepDrift, Definitions) {
  const SweepDrift s = sweep_drift({1.0, 10.0, 100.0}, {2.0, 2.2, 1.9});
  EXPECT_NEAR(s.growth, 0.1, 1e-15);
  EXPECT_NEAR(s.variation, 2.2 / 1.9 - 1.0, 1e-15);
  EXPECT_THROW(sweep_drift({1.0}, {1.0, 2.0}), InvalidArgument);
}

TEST(ProductLaw, NamesRoundTrip) {
  for (ProductLaw law : all_product_laws()) EXPECT_EQ(parse_product_law(product_law_name(law)), law);
  EXPECT_EQ(product_law_dim(ProductLaw::est4_2d), 2);
  EXPECT_EQ(product_law_dim(ProductLaw::est1_3d), 3);
  EXPECT_THROW(parse_product_law("est9-2D"), InvalidArgument);
}

TEST(ProductLaw, ZeroFactorGivesZeroLhs) {
  const std::vector<double> times{0.0, 0.5, 1.0};
  for (ProductLaw law : all_product_laws()) {
    const int d = product_law_dim(law);
    const auto g = Grid::create(d, d == 2 ? 32 : 16, 2.0 * kPi);
    const DyadicPartition part(g);
    const SpectralField f = nsm::testing::random_field(g, 3, 2.0, true);
    // The Maxwell flow regenerates E from B, so only the frozen factors stay zero for est4.
    const bool maxwell = law == ProductLaw::est4_2d || law == ProductLaw::est4_3d;
    const auto dyn = maxwell ? FactorDynamics::static_in_time : FactorDynamics::free;
    const auto [a, b] = product_factors(law, SpectralField(g), f, times, dyn);
    EXPECT_EQ(evaluate_product_law(law, a, b, part).lhs, 0.0) << product_law_name(law);
    const auto [c, e] = product_factors(law, f, SpectralField(g), times, FactorDynamics::static_in_time);
    EXPECT_EQ(evaluate_product_law(law, c, e, part).lhs, 0.0) << product_law_name(law);
  }
}

TEST(ProductLaw, Est43DShellPacketsScaleStable) {
  const auto g = Grid::create(3, 64, 2.0 * kPi);
  const DyadicPartition part(g);
  std::vector<double> ratios;
  for (int q = 0; q <= 3; ++q) {
    const SpectralField E = shell_packet(g, q, {1.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, false);
    const SpectralField B = shell_packet(g, q, {0.0, 1.0, 0.0}, {1.0, 1.0, 1.0}, true);
    const auto [a, b] = product_factors(ProductLaw::est4_3d, E, B, {0.0, 1.0}, FactorDynamics::static_in_time);
    const ProductSides sides = evaluate_product_law(ProductLaw::est4_3d, a, b, part);
    ratios.push_back(sides.lhs / sides.rhs);
  }
  EXPECT_LT(*std::max_element(ratios.begin(), ratios.end()) / *std::min_element(ratios.begin(), ratios.end()), 2.0);
}

TEST(Radial, ShellNormsOfShellZeroProfile) {
  // phi(rho) is supported in shells -1, 0, 1.
  double total = 0.0;
  for (int i = -3; i <= 3; ++i) {
    const double s = radial_shell_l2(shell_zero_profile, i);
    if (std::abs(i) >= 2) EXPECT_EQ(s, 0.0);
    total = std::max(total, s);
  }
  const double l2 = radial_l2(shell_zero_profile, 8.0 / 3.0);
  auto sq = [](double r) { return lp_phi(r) * lp_phi(r) * r; };
  const double oracle = std::sqrt(
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(sq, 0.75, 8.0 / 3.0, 12, 1e-14) / (2.0 * kPi));
  EXPECT_NEAR(l2 / oracle, 1.0, 1e-12);
  EXPECT_LT(total, l2);
}

TEST(Radial, PiecesSumToConvolutionAtOrigin) {
  RadialProduct prod(shell_zero_profile, shell_zero_profile, 0.75, 8.0 / 3.0);
  const double sum = prod.direct_spectrum(RadialProduct::Piece::paraproduct, 0.0) +
                     prod.direct_spectrum(RadialProduct::Piece::remainder, 0.0);
  // (phi * phi)(0) = int phi(|eta|)^2 d eta / (2 pi)^2.
  auto sq = [](double r) { return lp_phi(r) * lp_phi(r) * r; };
  const double oracle =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(sq, 0.75, 8.0 / 3.0, 12, 1e-14) / (2.0 * kPi);
  EXPECT_NEAR(sum / oracle, 1.0, 1e-8);
  EXPECT_EQ(prod.direct_spectrum(RadialProduct::Piece::paraproduct, prod.rho_max()), 0.0);
  EXPECT_THROW(prod.direct_spectrum(RadialProduct::Piece::remainder, -1.0), InvalidArgument);
}

TEST(Radial, ChebyshevTableMatchesQuadrature) {
  RadialProduct prod(shell_zero_profile, shell_zero_profile, 0.75, 8.0 / 3.0);
  prod.tabulate(64);
  const double scale = prod.direct_spectrum(RadialProduct::Piece::remainder, 0.0);
  for (double rho : {0.1, 0.9, 2.0, 3.7}) {
    for (auto piece : {RadialProduct::Piece::paraproduct, RadialProduct::Piece::remainder}) {
      const double direct = prod.direct_spectrum(piece, rho);
      EXPECT_NEAR(prod.spectrum(piece, rho), direct, 1e-3 * scale) << rho;
    }
  }
  EXPECT_THROW(prod.tabulate(5), InvalidArgument);
}

}  // namespace
}  // namespace nsm::harness
