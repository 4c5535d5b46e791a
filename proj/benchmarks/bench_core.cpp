// Copyright 2026 The pmlcontract Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "pmlcontract/bounds.hpp"
#include "pmlcontract/contraction.hpp"
#include "pmlcontract/leakage.hpp"
#include "pmlcontract/mechanisms.hpp"
#include "pmlcontract/random.hpp"

namespace {

using namespace pmlc;

StochasticKernel random_kernel(std::size_t n, std::size_t m,
                               std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    // Mix toward uniform so no column dies and the kernel stays generic.
    auto row = sample_simplex(rng, m);
    for (auto& v : row) v = 0.9 * v + 0.1 / double(m);
    rows.push_back(std::move(row));
  }
  return StochasticKernel(std::move(rows));
}

void BM_Dobrushin(benchmark::State& state) {
  const auto k = random_kernel(std::size_t(state.range(0)),
                               std::size_t(state.range(1)), 21u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dobrushin(k));
  }
}
BENCHMARK(BM_Dobrushin)->Args({10, 4})->Args({50, 8})->Args({200, 16});

void BM_LeakageCapacity(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const auto k = random_kernel(n, std::size_t(state.range(1)), 22u);
  const double c = 0.5 / double(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(leakage_capacity(k, c));
  }
}
BENCHMARK(BM_LeakageCapacity)->Args({10, 4})->Args({50, 8})->Args({200, 16});

void BM_EtaSearch(benchmark::State& state) {
  const auto k = random_kernel(5, 4, 23u);
  SearchConfig config;
  config.restarts = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        empirical_eta_f(k, DivergenceSpec::kl(), std::nullopt, config));
  }
}
BENCHMARK(BM_EtaSearch)->Arg(20)->Arg(100);

void BM_ConstructOptimal(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const BinaryMechanismSpec spec{n, 0.5, 0.25 / double(n), 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_optimal(spec));
  }
}
BENCHMARK(BM_ConstructOptimal)->Arg(5)->Arg(50);

void BM_SampleKernel(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const PrivacyBudget budget{0.8, 0.25 / double(n)};
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_kernel(n, 3, budget, seed++, 100));
  }
}
BENCHMARK(BM_SampleKernel)->Arg(5)->Arg(20);

void BM_BinetteBound(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        binette_bound(DivergenceSpec::kl(), 0.9, 0.02, 10, 0.4));
  }
}
BENCHMARK(BM_BinetteBound);

}  // namespace

BENCHMARK_MAIN();
