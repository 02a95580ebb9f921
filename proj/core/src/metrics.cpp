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

#include "fairsdp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace fairsdp {
namespace {

std::vector<int> compact_labels(const std::vector<int>& labels, int* count) {
  std::map<int, int> remap;
  for (int label : labels) remap.emplace(label, 0);
  int next = 0;
  for (auto& [label, idx] : remap) idx = next++;
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = remap[labels[i]];
  *count = next;
  return out;
}

// Entropy of a marginal in nats: log N - (1/N) sum a_i log a_i.
double entropy(const Eigen::VectorXi& sums, int total) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sums.size(); ++i) {
    if (sums[i] > 0) acc += sums[i] * std::log(static_cast<double>(sums[i]));
  }
  return std::log(static_cast<double>(total)) - acc / total;
}

double mutual_information(const ContingencyTable& t) {
  const double n = t.total;
  double mi = 0.0;
  for (Eigen::Index i = 0; i < t.counts.rows(); ++i) {
    for (Eigen::Index j = 0; j < t.counts.cols(); ++j) {
      const int nij = t.counts(i, j);
      if (nij == 0) continue;
      mi += (nij / n) * std::log(n * nij /
                                 (static_cast<double>(t.row_sums[i]) * t.col_sums[j]));
    }
  }
  return mi;
}

// E[MI] when one labeling is permuted uniformly at random: each cell
// follows a hypergeometric law over the fixed marginals.
double expected_mutual_information(const ContingencyTable& t) {
  const int n = t.total;
  const double log_n = std::log(static_cast<double>(n));
  double emi = 0.0;
  for (Eigen::Index i = 0; i < t.counts.rows(); ++i) {
    const int a = t.row_sums[i];
    for (Eigen::Index j = 0; j < t.counts.cols(); ++j) {
      const int b = t.col_sums[j];
      const int lo = std::max(1, a + b - n);
      const int hi = std::min(a, b);
      for (int nij = lo; nij <= hi; ++nij) {
        const double log_prob =
            std::lgamma(a + 1.0) + std::lgamma(b + 1.0) +
            std::lgamma(n - a + 1.0) + std::lgamma(n - b + 1.0) -
            std::lgamma(n + 1.0) - std::lgamma(nij + 1.0) -
            std::lgamma(a - nij + 1.0) - std::lgamma(b - nij + 1.0) -
            std::lgamma(n - a - b + nij + 1.0);
        const double term = (static_cast<double>(nij) / n) *
                            (log_n + std::log(static_cast<double>(nij)) -
                             std::log(static_cast<double>(a)) -
                             std::log(static_cast<double>(b)));
        emi += term * std::exp(log_prob);
      }
    }
  }
  return emi;
}

// H(row labels | col labels) in nats.
double conditional_entropy(const ContingencyTable& t) {
  const double n = t.total;
  double h = 0.0;
  for (Eigen::Index j = 0; j < t.counts.cols(); ++j) {
    for (Eigen::Index i = 0; i < t.counts.rows(); ++i) {
      const int nij = t.counts(i, j);
      if (nij == 0) continue;
      h -= (nij / n) * std::log(nij / static_cast<double>(t.col_sums[j]));
    }
  }
  return h;
}

double pairs2(long long m) { return 0.5 * m * (m - 1); }

void check_same_length(const std::vector<int>& u, const std::vector<int>& v) {
  if (u.empty() || u.size() != v.size()) {
    throw std::invalid_argument("label vectors must be non-empty and equal length");
  }
}

bool identical_partition(const std::vector<int>& u, const std::vector<int>& v) {
  // Same partition up to renaming: the joint labels must induce the same
  // equivalence classes as each side alone.
  std::map<int, int> u_to_v, v_to_u;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto [it1, fresh1] = u_to_v.emplace(u[i], v[i]);
    if (!fresh1 && it1->second != v[i]) return false;
    auto [it2, fresh2] = v_to_u.emplace(v[i], u[i]);
    if (!fresh2 && it2->second != u[i]) return false;
  }
  return true;
}

}  // namespace

ContingencyTable build_contingency(const std::vector<int>& u,
                                   const std::vector<int>& v) {
  check_same_length(u, v);
  int r = 0, c = 0;
  const auto cu = compact_labels(u, &r);
  const auto cv = compact_labels(v, &c);
  ContingencyTable t;
  t.counts = Eigen::MatrixXi::Zero(r, c);
  for (std::size_t i = 0; i < cu.size(); ++i) t.counts(cu[i], cv[i]) += 1;
  t.row_sums = t.counts.rowwise().sum();
  t.col_sums = t.counts.colwise().sum();
  t.total = static_cast<int>(u.size());
  return t;
}

double ami(const std::vector<int>& u, const std::vector<int>& v) {
  const ContingencyTable t = build_contingency(u, v);
  // A single-cluster side fixes every table fill, so MI and its
  // expectation are both identically zero; returning the exact limit
  // keeps one-cluster outputs at a hard 0 instead of summation residue.
  if (t.counts.rows() == 1 || t.counts.cols() == 1) return 0.0;
  const double mi = mutual_information(t);
  const double emi = expected_mutual_information(t);
  const double mean_h = 0.5 * (entropy(t.row_sums, t.total) +
                               entropy(t.col_sums, t.total));
  const double denom = mean_h - emi;
  if (denom == 0.0) return 0.0;
  return (mi - emi) / denom;
}

double ari(const std::vector<int>& u, const std::vector<int>& v) {
  const ContingencyTable t = build_contingency(u, v);
  double index = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (Eigen::Index i = 0; i < t.counts.rows(); ++i) {
    for (Eigen::Index j = 0; j < t.counts.cols(); ++j) {
      index += pairs2(t.counts(i, j));
    }
  }
  for (Eigen::Index i = 0; i < t.row_sums.size(); ++i) sum_a += pairs2(t.row_sums[i]);
  for (Eigen::Index j = 0; j < t.col_sums.size(); ++j) sum_b += pairs2(t.col_sums[j]);
  const double all_pairs = pairs2(t.total);
  const double expected = all_pairs > 0.0 ? sum_a * sum_b / all_pairs : 0.0;
  const double max_index = 0.5 * (sum_a + sum_b);
  const double denom = max_index - expected;
  if (denom == 0.0) {
    // Only two cases land here: two single-cluster labelings (score 0 by
    // the degenerate convention) and two all-singleton labelings, which
    // are the identical partition.
    if (t.counts.rows() == 1 && t.counts.cols() == 1) return 0.0;
    return identical_partition(u, v) ? 1.0 : 0.0;
  }
  return (index - expected) / denom;
}

double v_measure(const std::vector<int>& u, const std::vector<int>& v) {
  const ContingencyTable t = build_contingency(u, v);
  const double h_u = entropy(t.row_sums, t.total);
  const double h_v = entropy(t.col_sums, t.total);

  ContingencyTable flipped;
  flipped.counts = t.counts.transpose();
  flipped.row_sums = t.col_sums;
  flipped.col_sums = t.row_sums;
  flipped.total = t.total;

  const double homogeneity = h_u == 0.0 ? 1.0 : 1.0 - conditional_entropy(t) / h_u;
  const double completeness =
      h_v == 0.0 ? 1.0 : 1.0 - conditional_entropy(flipped) / h_v;
  const double sum = homogeneity + completeness;
  if (sum == 0.0) return 0.0;
  return 2.0 * homogeneity * completeness / sum;
}

double balance(const ClusterAssignment& c, const SensitiveAttributes& s) {
  if (c.size() != s.size()) {
    throw std::invalid_argument("assignment and attributes must cover the same nodes");
  }
  const int k = c.cluster_count();
  const int groups = s.group_count();
  Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(k, groups);
  for (int i = 0; i < c.size(); ++i) counts(c.label(i), s.group_of(i)) += 1;

  double best = std::numeric_limits<double>::infinity();
  for (int cluster = 0; cluster < k; ++cluster) {
    for (int g = 0; g < groups; ++g) {
      for (int h = 0; h < groups; ++h) {
        if (g == h) continue;
        if (counts(cluster, h) == 0) return 0.0;
        best = std::min(best, static_cast<double>(counts(cluster, g)) /
                                  counts(cluster, h));
      }
    }
  }
  return groups < 2 ? 0.0 : best;
}

Eigen::MatrixXd estimate_psi(const Graph& g, const ClusterAssignment& c) {
  if (c.size() != g.size()) {
    throw std::invalid_argument("assignment must cover the graph");
  }
  const int k = c.cluster_count();
  Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, k);
  Eigen::MatrixXd pairs = Eigen::MatrixXd::Zero(k, k);
  const auto& a = g.adjacency();
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      const int ci = c.label(i), cj = c.label(j);
      sums(ci, cj) += a(i, j);
      pairs(ci, cj) += 1.0;
      if (ci != cj) {
        sums(cj, ci) += a(i, j);
        pairs(cj, ci) += 1.0;
      }
    }
  }
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(k, k);
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (pairs(x, y) > 0.0) psi(x, y) = sums(x, y) / pairs(x, y);
    }
  }
  return psi;
}

double sbm_loglik(const Graph& g, const ClusterAssignment& c,
                  const Eigen::MatrixXd& psi) {
  if (c.size() != g.size()) {
    throw std::invalid_argument("assignment must cover the graph");
  }
  if (psi.rows() != c.cluster_count() || psi.cols() != c.cluster_count()) {
    throw std::invalid_argument("psi dimension must match the cluster count");
  }
  constexpr double kClamp = 1e-12;
  const auto& a = g.adjacency();
  double ll = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      const double m = std::clamp(psi(c.label(i), c.label(j)), kClamp, 1.0 - kClamp);
      ll += a(i, j) * std::log(m) + (1.0 - a(i, j)) * std::log(1.0 - m);
    }
  }
  return ll;
}

ScoreReport score_report(const ClusterAssignment& pred,
                         const std::vector<int>* truth,
                         const SensitiveAttributes& s,
                         const PenalizedMatrix* penalized) {
  if (s.size() != pred.size()) {
    throw std::invalid_argument("attributes must cover the assignment");
  }
  ScoreReport report;
  if (truth != nullptr) {
    if (static_cast<int>(truth->size()) != pred.size()) {
      throw std::invalid_argument("truth must cover the assignment");
    }
    report.temporal = MetricTriple{ami(*truth, pred.labels()),
                                   ari(*truth, pred.labels()),
                                   v_measure(*truth, pred.labels())};
  }
  report.specificity = MetricTriple{ami(s.groups(), pred.labels()),
                                    ari(s.groups(), pred.labels()),
                                    v_measure(s.groups(), pred.labels())};
  report.balance = balance(pred, s);
  if (penalized != nullptr && pred.cluster_count() == 2) {
    report.objective = objective_value(*penalized, pred);
  }
  return report;
}

}  // namespace fairsdp
