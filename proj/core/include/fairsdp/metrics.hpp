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

#ifndef FAIRSDP_METRICS_HPP_
#define FAIRSDP_METRICS_HPP_

#include <optional>
#include <vector>

#include "fairsdp/graph.hpp"
#include "fairsdp/spectral.hpp"

namespace fairsdp {

// Cross-tabulation of two label vectors over their observed labels.
struct ContingencyTable {
  Eigen::MatrixXi counts;   // rows: labels of u, cols: labels of v
  Eigen::VectorXi row_sums;
  Eigen::VectorXi col_sums;
  int total = 0;
};

ContingencyTable build_contingency(const std::vector<int>& u,
                                   const std::vector<int>& v);

// Adjusted mutual information.  Natural logarithms; the expected MI uses
// the exact hypergeometric model over fixed marginals; normalization by
// the arithmetic mean of the entropies.  A zero denominator (for example
// two constant labelings) maps to 0, so degenerate outputs score 0.
double ami(const std::vector<int>& u, const std::vector<int>& v);

// Adjusted Rand index by pair counting.  Identical partitions give 1.0;
// a zero denominator gives 0, except for two all-singleton labelings,
// which are identical partitions and give 1.0.  Two single-cluster
// labelings give 0.
double ari(const std::vector<int>& u, const std::vector<int>& v);

// Harmonic mean of homogeneity 1 - H(u|v)/H(u) and completeness
// 1 - H(v|u)/H(v), with the conventions: homogeneity is 1 when H(u) = 0,
// completeness is 1 when H(v) = 0, and the harmonic mean is 0 when both
// terms are 0.
double v_measure(const std::vector<int>& u, const std::vector<int>& v);

// min over clusters and ordered group pairs (g, h) of
// count(g in cluster) / count(h in cluster); 0 as soon as any cluster
// misses any group entirely.
double balance(const ClusterAssignment& c, const SensitiveAttributes& s);

// Block-wise edge density: entry (a, b) is the mean adjacency weight over
// node pairs across clusters a and b (unordered pairs within a block).
// Blocks with no pairs give 0.
Eigen::MatrixXd estimate_psi(const Graph& g, const ClusterAssignment& c);

// Bernoulli log-likelihood sum over unordered pairs:
//   A_ij log M_ij + (1 - A_ij) log(1 - M_ij),  M_ij = psi(c_i, c_j),
// with psi entries clamped to [1e-12, 1 - 1e-12].
double sbm_loglik(const Graph& g, const ClusterAssignment& c,
                  const Eigen::MatrixXd& psi);

struct MetricTriple {
  double ami = 0.0;
  double ari = 0.0;
  double v_measure = 0.0;
};

struct ScoreReport {
  // Agreement with ground-truth communities, when truth is known.
  std::optional<MetricTriple> temporal;
  // Agreement with the sensitive groups.
  MetricTriple specificity;
  double balance = 0.0;
  // y^T penalized y; only defined for two-cluster assignments with a
  // penalized matrix supplied.
  std::optional<double> objective;
};

ScoreReport score_report(const ClusterAssignment& pred,
                         const std::vector<int>* truth,
                         const SensitiveAttributes& s,
                         const PenalizedMatrix* penalized);

}  // namespace fairsdp

#endif  // FAIRSDP_METRICS_HPP_
