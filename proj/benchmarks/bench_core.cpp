// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "nsm/littlewood_paley.hpp"
#include "nsm/mhd_system.hpp"
#include "nsm/propagators.hpp"

namespace {

nsm::SpectralField random_field(const nsm::GridPtr& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  nsm::SpectralField f(g);
  for (std::size_t m = 0; m < g->size(); ++m) {
    const double amp = 1.0 / (1.0 + g->ksq(m));
    for (int c = 0; c < 3; ++c) f.at(c, m) = amp * nsm::cplx(normal(rng), normal(rng));
  }
  f.enforce_reality();
  f.truncate();
  f.remove_mean();
  return nsm::leray_project(f);
}

nsm::GridPtr grid_for(const benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  return nsm::Grid::create(d, n, 2.0 * std::numbers::pi);
}

void BM_CrossProduct(benchmark::State& state) {
  const auto g = grid_for(state);
  const auto a = random_field(g, 1);
  const auto b = random_field(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nsm::pointwise_product(a, b, nsm::Combiner::cross));
}
BENCHMARK(BM_CrossProduct)->Args({2, 128})->Args({3, 32});

void BM_Nonlinearity(benchmark::State& state) {
  const auto g = grid_for(state);
  const nsm::MhdState s(random_field(g, 1), random_field(g, 2), random_field(g, 3));
  for (auto _ : state) benchmark::DoNotOptimize(nsm::nonlinearity(s));
}
BENCHMARK(BM_Nonlinearity)->Args({2, 128})->Args({3, 32});

void BM_PropagatorApply(benchmark::State& state) {
  const auto g = grid_for(state);
  const nsm::PropagatorTable table(g, 1e-3);
  const nsm::MhdState s(random_field(g, 1), random_field(g, 2), random_field(g, 3));
  for (auto _ : state) benchmark::DoNotOptimize(table.apply(s));
}
BENCHMARK(BM_PropagatorApply)->Args({2, 128})->Args({3, 32});

void BM_DuhamelStep(benchmark::State& state) {
  const auto g = grid_for(state);
  const nsm::PropagatorTable table(g, 1e-3);
  const nsm::MhdState s(random_field(g, 1), random_field(g, 2), random_field(g, 3));
  const auto n = nsm::make_nonlinearity();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsm::duhamel_step(s, n, table, nsm::Scheme::exp_trapezoid));
  }
}
BENCHMARK(BM_DuhamelStep)->Args({2, 128})->Args({3, 32});

void BM_BonyDecompose(benchmark::State& state) {
  const auto g = grid_for(state);
  const nsm::DyadicPartition part(g);
  const auto a = random_field(g, 1);
  const auto b = random_field(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nsm::bony_decompose(a, b, part, nsm::Combiner::cross));
}
BENCHMARK(BM_BonyDecompose)->Args({2, 128})->Args({3, 32});

}  // namespace

BENCHMARK_MAIN();
