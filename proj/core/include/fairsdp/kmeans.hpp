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

#ifndef FAIRSDP_KMEANS_HPP_
#define FAIRSDP_KMEANS_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace fairsdp {

struct KmeansResult {
  std::vector<int> labels;     // cluster per row, in [0, k)
  Eigen::MatrixXd centroids;   // k x d
  double wcss = 0.0;           // within-cluster sum of squares
};

// Lloyd's algorithm with k-means++ seeding.  Each restart runs until the
// largest centroid movement falls below 1e-9 or 300 iterations; the best
// restart by WCSS wins.  Deterministic given the seed.  Requires
// 1 <= k <= rows.
KmeansResult kmeans(const Eigen::MatrixXd& rows, int k, int restarts,
                    std::uint64_t seed);

}  // namespace fairsdp

#endif  // FAIRSDP_KMEANS_HPP_
