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

#ifndef FAIRSDP_GRAPH_HPP_
#define FAIRSDP_GRAPH_HPP_

#include <Eigen/Dense>
#include <vector>

namespace fairsdp {

// Undirected weighted graph held as a dense symmetric adjacency matrix.
// Invariants enforced at construction: square, exactly symmetric, zero
// diagonal, all weights finite and in [0, 1].
class Graph {
 public:
  explicit Graph(Eigen::MatrixXd adjacency);

  int size() const { return static_cast<int>(adjacency_.rows()); }
  const Eigen::MatrixXd& adjacency() const { return adjacency_; }

  // Number of unordered pairs with nonzero weight.
  int edge_count() const;

  // True when every weight is exactly 0 or 1.
  bool is_unweighted() const;

 private:
  Eigen::MatrixXd adjacency_;
};

// Per-node sensitive attribute.  Two encodings:
//  - binary: one value in {-1, +1} per node;
//  - multi-level: m disjoint groups given as 0/1 indicator vectors that
//    partition the node set (every node in exactly one group).
class SensitiveAttributes {
 public:
  static SensitiveAttributes binary(Eigen::VectorXi signs);
  static SensitiveAttributes multi_level(std::vector<Eigen::VectorXi> indicators);

  bool is_binary() const { return binary_; }
  int size() const { return static_cast<int>(group_.size()); }
  int group_count() const { return group_count_; }

  // Group index of a node: binary maps -1 -> 0 and +1 -> 1, multi-level
  // uses the indicator position.
  int group_of(int node) const { return group_[node]; }
  const std::vector<int>& groups() const { return group_; }

  // Binary encoding only: the +-1 vector as doubles.
  Eigen::VectorXd signed_vector() const;

  // Multi-level encoding only: the 0/1 indicator for one group.
  Eigen::VectorXd indicator(int group) const;

 private:
  SensitiveAttributes() = default;
  bool binary_ = true;
  int group_count_ = 0;
  std::vector<int> group_;
};

// Partition of nodes into k clusters, labels in [0, k).
class ClusterAssignment {
 public:
  ClusterAssignment(std::vector<int> labels, int k);

  int size() const { return static_cast<int>(labels_.size()); }
  int cluster_count() const { return k_; }
  int label(int node) const { return labels_[node]; }
  const std::vector<int>& labels() const { return labels_; }

  // True when all nodes share one label.
  bool is_degenerate() const;

  // k == 2 only: labels mapped to {-1, +1} (0 -> -1, 1 -> +1).
  Eigen::VectorXd signs() const;

 private:
  std::vector<int> labels_;
  int k_ = 0;
};

enum class AdjacencyMode {
  kInverseDistance,  // weight 1 / (1 + d(x_i, x_j))
  kThreshold,        // weight 1 when d(x_i, x_j) <= tau, else 0
};

// Build a graph from points in R^d using Euclidean distances.
Graph adjacency_from_points(const std::vector<Eigen::VectorXd>& points,
                            AdjacencyMode mode, double tau = 0.0);

}  // namespace fairsdp

#endif  // FAIRSDP_GRAPH_HPP_
