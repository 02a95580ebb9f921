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

#include <vector>

#include "fairsdp/kmeans.hpp"
#include "fairsdp/metrics.hpp"
#include "fairsdp/rng.hpp"
#include "fairsdp/sweep.hpp"

namespace {

std::vector<int> random_labels(int n, int k, std::uint64_t seed) {
  fairsdp::Rng rng(seed);
  std::vector<int> labels(n);
  for (int& label : labels) label = static_cast<int>(rng.uniform_index(k));
  return labels;
}

void BM_AdjustedMutualInformation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> u = random_labels(n, 8, 1);
  const std::vector<int> v = random_labels(n, 8, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairsdp::ami(u, v));
  }
}
BENCHMARK(BM_AdjustedMutualInformation)->Range(1 << 10, 1 << 17);

void BM_AdjustedRandIndex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> u = random_labels(n, 8, 3);
  const std::vector<int> v = random_labels(n, 8, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairsdp::ari(u, v));
  }
}
BENCHMARK(BM_AdjustedRandIndex)->Range(1 << 10, 1 << 17);

void BM_ContingencyTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> u = random_labels(n, 16, 5);
  const std::vector<int> v = random_labels(n, 16, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairsdp::build_contingency(u, v));
  }
}
BENCHMARK(BM_ContingencyTable)->Range(1 << 10, 1 << 17);

void BM_KmeansRestarts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  fairsdp::Rng rng(7);
  Eigen::MatrixXd rows(n, 3);
  for (int i = 0; i < n; ++i) {
    const double center = static_cast<double>(i % 4);
    for (int j = 0; j < 3; ++j)
      rows(i, j) = center + 0.1 * rng.uniform(-1.0, 1.0);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairsdp::kmeans(rows, 4, 10, 0));
  }
}
BENCHMARK(BM_KmeansRestarts)->Range(256, 4096);

void BM_AssignmentHash(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> labels = random_labels(n, 2, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairsdp::assignment_hash(labels));
  }
}
BENCHMARK(BM_AssignmentHash)->Range(1 << 10, 1 << 17);

}  // namespace

BENCHMARK_MAIN();
