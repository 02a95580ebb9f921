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

#include "fairsdp/admm.hpp"
#include "fairsdp/sbm.hpp"
#include "fairsdp/spectral.hpp"

namespace {

fairsdp::GeneratedGraph two_blocks(int half, std::uint64_t seed) {
  fairsdp::SbmParams params;
  params.sizes = {half, half};
  params.psi.resize(2, 2);
  params.psi << 0.90, 0.05, 0.05, 0.90;
  params.seed = seed;
  return fairsdp::generate_sbm(params);
}

void BM_GenerateTwoBlocks(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_blocks(half, seed++));
  }
}
BENCHMARK(BM_GenerateTwoBlocks)->Range(64, 1024);

void BM_SpectralSolve(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  const fairsdp::GeneratedGraph gen = two_blocks(half, 11);
  const fairsdp::SensitiveAttributes sens =
      fairsdp::sample_sensitive(gen.graph.size(), 0.5, 12);
  fairsdp::SolverConfig config;
  for (auto _ : state) {
    const fairsdp::PenalizedMatrix pen =
        fairsdp::build_penalized(gen.graph, sens, config);
    benchmark::DoNotOptimize(fairsdp::fair_spectral_binary(pen));
  }
  state.SetComplexityN(half);
}
BENCHMARK(BM_SpectralSolve)->Range(64, 1024)->Complexity();

// Cost of one hundred splitting iterations; the eigendecomposition inside
// the cone projection dominates.
void BM_SplittingIterations(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  const fairsdp::GeneratedGraph gen = two_blocks(half, 21);
  const fairsdp::SensitiveAttributes sens =
      fairsdp::sample_sensitive(gen.graph.size(), 0.5, 22);
  fairsdp::AdmmConfig config;
  config.max_iter = 100;
  config.tol = 1e-300;  // never met: run the full budget
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairsdp::admm_solve(gen.graph, sens, config));
  }
}
BENCHMARK(BM_SplittingIterations)->Range(16, 64);

}  // namespace
