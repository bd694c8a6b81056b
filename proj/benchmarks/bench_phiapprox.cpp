// Copyright 2026 The phiapprox Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "phiapprox/approx.hpp"
#include "phiapprox/inverse.hpp"
#include "phiapprox/oracle.hpp"

namespace {

std::vector<double> uniform_inputs(double lo, double hi) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(4096);
  for (double& x : v) x = dist(rng);
  return v;
}

void BM_Evaluate(benchmark::State& state) {
  const auto m = static_cast<phiapprox::Method>(state.range(0));
  const auto inputs = uniform_inputs(0.0, 7.0);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phiapprox::evaluate(m, inputs[i++ & 4095]));
  }
  state.SetLabel(std::string(phiapprox::method_name(m)));
}
BENCHMARK(BM_Evaluate)->DenseRange(0, 4);

void BM_Quantile(benchmark::State& state) {
  const auto m = static_cast<phiapprox::Method>(state.range(0));
  const auto inputs = uniform_inputs(1e-6, 1.0 - 1e-6);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phiapprox::quantile(m, inputs[i++ & 4095]));
  }
  state.SetLabel(std::string(phiapprox::method_name(m)));
}
BENCHMARK(BM_Quantile)->DenseRange(0, 2);

void BM_OraclePhi(benchmark::State& state) {
  const auto inputs = uniform_inputs(0.0, 7.0);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phiapprox::oracle::phi_ref(inputs[i++ & 4095]));
  }
}
BENCHMARK(BM_OraclePhi);

void BM_OracleQuantile(benchmark::State& state) {
  const auto inputs = uniform_inputs(1e-6, 1.0 - 1e-6);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        phiapprox::oracle::quantile_ref(inputs[i++ & 4095]));
  }
}
BENCHMARK(BM_OracleQuantile);

}  // namespace

BENCHMARK_MAIN();
