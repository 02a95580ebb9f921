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

#include "fairsdp/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fairsdp {

Graph::Graph(Eigen::MatrixXd adjacency) : adjacency_(std::move(adjacency)) {
  const auto n = adjacency_.rows();
  if (n == 0 || adjacency_.cols() != n) {
    throw std::invalid_argument("adjacency matrix must be square and non-empty");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (adjacency_(i, i) != 0.0) {
      throw std::invalid_argument("adjacency diagonal must be zero at node " +
                                  std::to_string(i));
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double w = adjacency_(i, j);
      if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
        throw std::invalid_argument("edge weight out of [0,1] at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (w != adjacency_(j, i)) {
        throw std::invalid_argument("adjacency matrix must be symmetric");
      }
    }
  }
}

int Graph::edge_count() const {
  int count = 0;
  for (Eigen::Index i = 0; i < adjacency_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < adjacency_.cols(); ++j) {
      if (adjacency_(i, j) != 0.0) ++count;
    }
  }
  return count;
}

bool Graph::is_unweighted() const {
  for (Eigen::Index i = 0; i < adjacency_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < adjacency_.cols(); ++j) {
      const double w = adjacency_(i, j);
      if (w != 0.0 && w != 1.0) return false;
    }
  }
  return true;
}

SensitiveAttributes SensitiveAttributes::binary(Eigen::VectorXi signs) {
  if (signs.size() == 0) {
    throw std::invalid_argument("sensitive attribute vector must be non-empty");
  }
  SensitiveAttributes s;
  s.binary_ = true;
  s.group_count_ = 2;
  s.group_.resize(signs.size());
  for (Eigen::Index i = 0; i < signs.size(); ++i) {
    if (signs[i] != -1 && signs[i] != 1) {
      throw std::invalid_argument("binary sensitive values must be -1 or +1");
    }
    s.group_[i] = signs[i] == -1 ? 0 : 1;
  }
  return s;
}

SensitiveAttributes SensitiveAttributes::multi_level(
    std::vector<Eigen::VectorXi> indicators) {
  if (indicators.empty() || indicators[0].size() == 0) {
    throw std::invalid_argument("multi-level attributes need at least one group");
  }
  const Eigen::Index n = indicators[0].size();
  SensitiveAttributes s;
  s.binary_ = false;
  s.group_count_ = static_cast<int>(indicators.size());
  s.group_.assign(n, -1);
  for (int g = 0; g < s.group_count_; ++g) {
    if (indicators[g].size() != n) {
      throw std::invalid_argument("indicator vectors must share one length");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      const int v = indicators[g][i];
      if (v != 0 && v != 1) {
        throw std::invalid_argument("indicator entries must be 0 or 1");
      }
      if (v == 1) {
        if (s.group_[i] != -1) {
          throw std::invalid_argument("groups must be disjoint: node " +
                                      std::to_string(i) + " in two groups");
        }
        s.group_[i] = g;
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (s.group_[i] == -1) {
      throw std::invalid_argument("groups must cover all nodes: node " +
                                  std::to_string(i) + " unassigned");
    }
  }
  return s;
}

Eigen::VectorXd SensitiveAttributes::signed_vector() const {
  if (!binary_) {
    throw std::logic_error("signed_vector requires the binary encoding");
  }
  Eigen::VectorXd s(group_.size());
  for (std::size_t i = 0; i < group_.size(); ++i) {
    s[static_cast<Eigen::Index>(i)] = group_[i] == 0 ? -1.0 : 1.0;
  }
  return s;
}

Eigen::VectorXd SensitiveAttributes::indicator(int group) const {
  if (group < 0 || group >= group_count_) {
    throw std::invalid_argument("group index out of range");
  }
  Eigen::VectorXd v = Eigen::VectorXd::Zero(group_.size());
  for (std::size_t i = 0; i < group_.size(); ++i) {
    if (group_[i] == group) v[static_cast<Eigen::Index>(i)] = 1.0;
  }
  return v;
}

ClusterAssignment::ClusterAssignment(std::vector<int> labels, int k)
    : labels_(std::move(labels)), k_(k) {
  if (labels_.empty()) {
    throw std::invalid_argument("assignment must cover at least one node");
  }
  if (k_ < 1) {
    throw std::invalid_argument("cluster count must be positive");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 0 || labels_[i] >= k_) {
      throw std::invalid_argument("label out of [0,k) at node " + std::to_string(i));
    }
  }
}

bool ClusterAssignment::is_degenerate() const {
  for (int label : labels_) {
    if (label != labels_[0]) return false;
  }
  return true;
}

Eigen::VectorXd ClusterAssignment::signs() const {
  if (k_ != 2) {
    throw std::logic_error("signs() requires a two-cluster assignment");
  }
  Eigen::VectorXd y(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    y[static_cast<Eigen::Index>(i)] = labels_[i] == 0 ? -1.0 : 1.0;
  }
  return y;
}

Graph adjacency_from_points(const std::vector<Eigen::VectorXd>& points,
                            AdjacencyMode mode, double tau) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw std::invalid_argument("point set must be non-empty");
  for (const auto& p : points) {
    if (p.size() != points[0].size()) {
      throw std::invalid_argument("points must share one dimension");
    }
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = (points[i] - points[j]).norm();
      double w = 0.0;
      switch (mode) {
        case AdjacencyMode::kInverseDistance:
          w = 1.0 / (1.0 + d);
          break;
        case AdjacencyMode::kThreshold:
          w = d <= tau ? 1.0 : 0.0;
          break;
      }
      a(i, j) = w;
      a(j, i) = w;
    }
  }
  return Graph(a);
}

}  // namespace fairsdp
