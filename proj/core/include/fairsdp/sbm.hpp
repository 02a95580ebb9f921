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

#ifndef FAIRSDP_SBM_HPP_
#define FAIRSDP_SBM_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "fairsdp/graph.hpp"

namespace fairsdp {

// Stochastic block model: psi(a, b) is the edge probability between
// communities a and b.  psi must be symmetric with entries in [0, 1] and
// sizes must match its dimension.
struct SbmParams {
  std::vector<int> sizes;
  Eigen::MatrixXd psi;
  std::uint64_t seed = 0;
};

struct GeneratedGraph {
  Graph graph;
  std::vector<int> truth;  // community per node, 0-based, block order
};

// Samples each unordered pair independently with probability
// psi(community(i), community(j)).  Nodes are numbered block by block.
// Deterministic given the seed.
GeneratedGraph generate_sbm(const SbmParams& params);

// Complete weighted graph on two blocks: weights within a block are drawn
// uniformly from within_range, weights across blocks from between_range.
// When bernoulli is true the draw becomes a presence probability instead:
// p ~ U(range), then the pair gets weight 1 with probability p, else 0.
struct WeightedTwoClusterParams {
  std::pair<int, int> sizes;
  std::pair<double, double> within_range = {0.5, 1.0};
  std::pair<double, double> between_range = {0.0, 0.5};
  bool bernoulli = false;
  std::uint64_t seed = 0;
};

GeneratedGraph generate_weighted_two_cluster(const WeightedTwoClusterParams& params);

// Independent binary attribute: each node gets +1 with probability p,
// else -1.  correlation in [0, 1] is the probability that a node instead
// copies the sign of its ground-truth community (community 0 -> -1,
// others -> +1); 0 keeps the attribute fully independent.
SensitiveAttributes sample_sensitive(int n, double p, std::uint64_t seed,
                                     double correlation = 0.0,
                                     const std::vector<int>* truth = nullptr);

}  // namespace fairsdp

#endif  // FAIRSDP_SBM_HPP_
