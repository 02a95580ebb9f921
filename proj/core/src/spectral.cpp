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

#include "fairsdp/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fairsdp/errors.hpp"
#include "fairsdp/kmeans.hpp"

namespace fairsdp {
namespace {

// Full decompositions cost O(n^3); beyond this size the two-cluster path
// asks the blocked iteration for the few dominant pairs instead.
constexpr int kDenseEigLimit = 256;

// Second eigenvector under |value| ordering.  Returns the vector and, via
// sym_eig fallback, stays correct when the iterative path stalls.
Eigen::VectorXd second_vector_absolute(const Eigen::MatrixXd& m) {
  if (m.rows() > kDenseEigLimit) {
    try {
      const SymmetricEigen top = top_eig_abs(m, 2);
      return top.eigenvectors.col(1);
    } catch (const SolverError&) {
      // Clustered magnitudes; the full solver below settles it.
    }
  }
  const SymmetricEigen eig = sym_eig(m);
  std::vector<Eigen::Index> order(eig.eigenvalues.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const double ma = std::abs(eig.eigenvalues[a]);
    const double mb = std::abs(eig.eigenvalues[b]);
    if (ma != mb) return ma > mb;
    return eig.eigenvalues[a] > eig.eigenvalues[b];
  });
  return eig.eigenvectors.col(order[1]);
}

ClusterAssignment signs_to_assignment(const Eigen::VectorXd& v) {
  std::vector<int> labels(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    labels[i] = v[i] >= 0.0 ? 1 : 0;  // sign(0) counts as +1
  }
  return ClusterAssignment(labels, 2);
}

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m, const std::vector<int>& nodes) {
  Eigen::MatrixXd sub(nodes.size(), nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      sub(i, j) = m(nodes[i], nodes[j]);
    }
  }
  return sub;
}

// Second-largest algebraic eigenvalue of a cluster's induced submatrix;
// used to rank clusters for splitting.
double split_priority(const Eigen::MatrixXd& m, const std::vector<int>& nodes) {
  const SymmetricEigen eig = sym_eig(submatrix(m, nodes));
  return eig.eigenvalues[1];
}

}  // namespace

PenalizedMatrix build_penalized(const Graph& g, const SensitiveAttributes& s,
                                const SolverConfig& config) {
  const int n = g.size();
  if (s.size() != n) {
    throw std::invalid_argument("attribute length does not match graph size");
  }
  Eigen::MatrixXd m = g.adjacency();
  m.array() -= config.mu;
  if (s.is_binary()) {
    if (config.lambda_weights.size() != 1) {
      throw std::invalid_argument("binary attributes take exactly one lambda");
    }
    const double lambda = config.lambda_weights[0];
    if (lambda != 0.0) {
      const Eigen::VectorXd sv = s.signed_vector();
      m.noalias() -= lambda * (sv * sv.transpose());
    }
  } else {
    if (static_cast<int>(config.lambda_weights.size()) != s.group_count()) {
      throw std::invalid_argument("need one lambda per attribute group");
    }
    for (int grp = 0; grp < s.group_count(); ++grp) {
      const double lambda = config.lambda_weights[grp];
      if (lambda == 0.0) continue;
      Eigen::VectorXd ind = s.indicator(grp);
      if (config.center_indicators) ind.array() -= ind.mean();
      m.noalias() -= lambda * (ind * ind.transpose());
    }
  }
  return {m};
}

ClusterAssignment fair_spectral_binary(const PenalizedMatrix& penalized,
                                       EigOrdering ordering) {
  const Eigen::MatrixXd& m = penalized.matrix;
  if (m.rows() < 2) {
    throw std::invalid_argument("need at least two nodes to bisect");
  }
  Eigen::VectorXd v2;
  if (ordering == EigOrdering::kAbsolute) {
    v2 = second_vector_absolute(m);
  } else {
    v2 = sym_eig(m).eigenvectors.col(1);
  }
  return signs_to_assignment(v2);
}

ClusterAssignment fair_spectral_k(const PenalizedMatrix& penalized,
                                  const SolverConfig& config) {
  const Eigen::MatrixXd& m = penalized.matrix;
  const Eigen::Index n = m.rows();
  if (config.k < 2) throw std::invalid_argument("k must be >= 2");
  if (config.k > n) throw std::invalid_argument("k exceeds the node count");

  const LaplacianMatrix lap = build_laplacian(m, config.laplacian_mode);
  const SymmetricEigen eig = sym_eig(lap.matrix);
  // sym_eig sorts descending, so the k smallest sit in the last columns;
  // keep them ordered by ascending eigenvalue.
  Eigen::MatrixXd embedding(n, config.k);
  for (int j = 0; j < config.k; ++j) {
    embedding.col(j) = eig.eigenvectors.col(n - 1 - j);
  }
  if (config.renormalize_rows) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double norm = embedding.row(i).norm();
      if (norm > 0.0) embedding.row(i) /= norm;
    }
  }
  const KmeansResult km = kmeans(embedding, config.k, config.kmeans_restarts,
                                 config.kmeans_seed);
  return ClusterAssignment(km.labels, config.k);
}

ClusterAssignment recursive_bisection(const PenalizedMatrix& penalized,
                                      const SolverConfig& config) {
  const Eigen::MatrixXd& m = penalized.matrix;
  const int n = static_cast<int>(m.rows());
  if (config.k < 2) throw std::invalid_argument("k must be >= 2");
  if (config.k > n) throw std::invalid_argument("k exceeds the node count");

  std::vector<std::vector<int>> clusters;
  {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    clusters.push_back(std::move(all));
  }

  while (static_cast<int>(clusters.size()) < config.k) {
    // Choose the splittable cluster with the largest second eigenvalue of
    // its induced submatrix; ties favor the larger cluster, then the one
    // containing the smallest node id.
    int chosen = -1;
    double chosen_priority = 0.0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (clusters[c].size() < 2) continue;
      const double priority = split_priority(m, clusters[c]);
      if (chosen < 0 || priority > chosen_priority ||
          (priority == chosen_priority &&
           (clusters[c].size() > clusters[chosen].size() ||
            (clusters[c].size() == clusters[chosen].size() &&
             clusters[c][0] < clusters[chosen][0])))) {
        chosen = static_cast<int>(c);
        chosen_priority = priority;
      }
    }
    if (chosen < 0) {
      throw SolverError("no splittable cluster left before reaching k");
    }

    const std::vector<int> nodes = clusters[chosen];
    const Eigen::MatrixXd sub = submatrix(m, nodes);
    Eigen::VectorXd v2;
    if (config.ordering == EigOrdering::kAbsolute && sub.rows() >= 2) {
      v2 = second_vector_absolute(sub);
    } else {
      v2 = sym_eig(sub).eigenvectors.col(1);
    }
    std::vector<int> side_a, side_b;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      (v2[static_cast<Eigen::Index>(i)] >= 0.0 ? side_b : side_a).push_back(nodes[i]);
    }
    if (side_a.empty() || side_b.empty()) {
      // Constant-sign eigenvector; peel off the most separated node so the
      // recursion always makes progress (k = n stays reachable).
      Eigen::Index peel = 0;
      for (Eigen::Index i = 1; i < v2.size(); ++i) {
        if (v2[i] < v2[peel]) peel = i;
      }
      side_a.assign(1, nodes[static_cast<std::size_t>(peel)]);
      side_b.clear();
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (static_cast<Eigen::Index>(i) != peel) side_b.push_back(nodes[i]);
      }
    }
    // The half holding the smallest node id keeps the slot; the other
    // half becomes a new cluster.  Keeps label order deterministic.
    if (side_b[0] < side_a[0]) std::swap(side_a, side_b);
    clusters[chosen] = std::move(side_a);
    clusters.push_back(std::move(side_b));
  }

  std::vector<int> labels(n, -1);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (int node : clusters[c]) labels[node] = static_cast<int>(c);
  }
  return ClusterAssignment(labels, config.k);
}

double objective_value(const PenalizedMatrix& penalized,
                       const ClusterAssignment& c) {
  if (c.cluster_count() != 2) {
    throw std::invalid_argument("objective_value needs a two-cluster assignment");
  }
  if (c.size() != penalized.matrix.rows()) {
    throw std::invalid_argument("assignment length does not match matrix size");
  }
  const Eigen::VectorXd y = c.signs();
  return y.dot(penalized.matrix * y);
}

}  // namespace fairsdp
