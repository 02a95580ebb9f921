// Copyright 2026 The FairSDP Authors.
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

#include "fairsdp/numerics.hpp"
#include "fairsdp/rng.hpp"

namespace {

Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed) {
  fairsdp::Rng rng(seed);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = rng.uniform(-1.0, 1.0);
  return m;
}

// Penalized-style matrix: a strong rank-1 offset over bulk noise, the
// shape the partial solver sees in production.
Eigen::MatrixXd offset_symmetric(int n, std::uint64_t seed) {
  Eigen::MatrixXd m = 0.05 * random_symmetric(n, seed);
  m -= Eigen::MatrixXd::Constant(n, n, 0.5);
  return m;
}

void BM_FullEigendecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd m = random_symmetric(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairsdp::sym_eig(m));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FullEigendecomposition)->Range(64, 1024)->Complexity();

void BM_PartialEigendecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd m = offset_symmetric(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairsdp::top_eig_abs(m, 2));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_PartialEigendecomposition)->Range(64, 1024)->Complexity();

void BM_EigenvalueShrinkage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd m = random_symmetric(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairsdp::svt_psd(m, 0.5));
  }
}
BENCHMARK(BM_EigenvalueShrinkage)->Range(32, 256);

void BM_PowerIteration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::MatrixXd m = random_symmetric(n, 4);
  m = (m * m.transpose()).eval();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairsdp::power_iteration(m, 1e-8));
  }
}
BENCHMARK(BM_PowerIteration)->Range(64, 512);

}  // namespace
