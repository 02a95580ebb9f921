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

// Reference implementations used only by the tests.  Every function here
// recomputes a library quantity from its definition by a deliberately
// different route (direct summation, permutation averaging, exhaustive
// enumeration, generic numerical minimization) so that agreement between
// the library and this file is evidence, not tautology.

#ifndef FAIRSDP_TESTS_ORACLES_HPP_
#define FAIRSDP_TESTS_ORACLES_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// Label bookkeeping.

inline std::map<int, int> marginal_counts(const std::vector<int>& labels) {
  std::map<int, int> counts;
  for (int value : labels) ++counts[value];
  return counts;
}

inline std::map<std::pair<int, int>, int> joint_counts(
    const std::vector<int>& u, const std::vector<int>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
  std::map<std::pair<int, int>, int> counts;
  for (std::size_t i = 0; i < u.size(); ++i) ++counts[{u[i], v[i]}];
  return counts;
}

inline bool same_partition(const std::vector<int>& u,
                           const std::vector<int>& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if ((u[i] == u[j]) != (v[i] == v[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Information-theoretic scores, natural logarithms throughout.

inline double entropy(const std::vector<int>& labels) {
  const double n = static_cast<double>(labels.size());
  double h = 0.0;
  for (const auto& [value, count] : marginal_counts(labels)) {
    const double p = count / n;
    h -= p * std::log(p);
  }
  return h;
}

inline double mutual_information(const std::vector<int>& u,
                                 const std::vector<int>& v) {
  const double n = static_cast<double>(u.size());
  const auto row = marginal_counts(u);
  const auto col = marginal_counts(v);
  double mi = 0.0;
  for (const auto& [cell, nij] : joint_counts(u, v)) {
    const double a = row.at(cell.first);
    const double b = col.at(cell.second);
    mi += (nij / n) * std::log(nij * n / (a * b));
  }
  return mi;
}

// log(k!) by plain summation of logs; no gamma function involved.
class LogFactorial {
 public:
  explicit LogFactorial(int max_n) : table_(max_n + 1, 0.0) {
    for (int i = 2; i <= max_n; ++i)
      table_[i] = table_[i - 1] + std::log(static_cast<double>(i));
  }
  double operator()(int k) const { return table_.at(k); }

 private:
  std::vector<double> table_;
};

// Expected mutual information under the hypergeometric model with both
// marginals fixed, summed term by term from the closed-form cell law.
inline double expected_mi(const std::vector<int>& u,
                          const std::vector<int>& v) {
  const int n = static_cast<int>(u.size());
  const LogFactorial lf(n);
  double emi = 0.0;
  for (const auto& [au, a] : marginal_counts(u)) {
    for (const auto& [bv, b] : marginal_counts(v)) {
      const int lo = std::max(1, a + b - n);
      const int hi = std::min(a, b);
      for (int nij = lo; nij <= hi; ++nij) {
        const double log_prob = lf(a) + lf(b) + lf(n - a) + lf(n - b) -
                                lf(n) - lf(nij) - lf(a - nij) -
                                lf(b - nij) - lf(n - a - b + nij);
        const double term =
            (static_cast<double>(nij) / n) *
            std::log(static_cast<double>(nij) * n /
                     (static_cast<double>(a) * b));
        emi += std::exp(log_prob) * term;
      }
    }
  }
  return emi;
}

// Definitional check for expected_mi: the exact average of the mutual
// information over every permutation of one labeling.  Factorial cost,
// so only usable for very small n.
inline double expected_mi_by_permutation(const std::vector<int>& u,
                                         const std::vector<int>& v) {
  if (u.size() > 9) throw std::invalid_argument("permutation oracle too big");
  std::vector<int> order(u.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end());
  double total = 0.0;
  long long count = 0;
  std::vector<int> permuted(v.size());
  do {
    for (std::size_t i = 0; i < v.size(); ++i) permuted[i] = v[order[i]];
    total += mutual_information(u, permuted);
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return total / static_cast<double>(count);
}

inline double ami(const std::vector<int>& u, const std::vector<int>& v) {
  const double mi = mutual_information(u, v);
  const double emi = expected_mi(u, v);
  const double denom = 0.5 * (entropy(u) + entropy(v)) - emi;
  if (denom == 0.0) return 0.0;
  return (mi - emi) / denom;
}

// ---------------------------------------------------------------------------
// Pair-counting scores.

struct PairCounts {
  // together/apart in u crossed with together/apart in v
  long long both = 0, u_only = 0, v_only = 0, neither = 0;
};

inline PairCounts count_pairs(const std::vector<int>& u,
                              const std::vector<int>& v) {
  PairCounts c;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const bool tu = u[i] == u[j];
      const bool tv = v[i] == v[j];
      if (tu && tv) ++c.both;
      else if (tu) ++c.u_only;
      else if (tv) ++c.v_only;
      else ++c.neither;
    }
  }
  return c;
}

// Adjusted Rand index in its 2x2 pair-table form, which never touches
// the contingency table the library builds.
inline double ari(const std::vector<int>& u, const std::vector<int>& v) {
  const PairCounts c = count_pairs(u, v);
  const double numerator =
      2.0 * (static_cast<double>(c.both) * c.neither -
             static_cast<double>(c.u_only) * c.v_only);
  const double denominator =
      static_cast<double>(c.both + c.u_only) * (c.u_only + c.neither) +
      static_cast<double>(c.both + c.v_only) * (c.v_only + c.neither);
  if (denominator == 0.0) {
    if (marginal_counts(u).size() == 1 && marginal_counts(v).size() == 1)
      return 0.0;
    return same_partition(u, v) ? 1.0 : 0.0;
  }
  return numerator / denominator;
}

// ---------------------------------------------------------------------------
// V-measure.

inline double conditional_entropy(const std::vector<int>& u,
                                  const std::vector<int>& v) {
  const double n = static_cast<double>(u.size());
  const auto col = marginal_counts(v);
  double h = 0.0;
  for (const auto& [cell, nij] : joint_counts(u, v))
    h += (nij / n) * std::log(static_cast<double>(col.at(cell.second)) / nij);
  return h;
}

inline double v_measure(const std::vector<int>& u, const std::vector<int>& v) {
  const double hu = entropy(u);
  const double hv = entropy(v);
  const double homogeneity = hu == 0.0 ? 1.0 : 1.0 - conditional_entropy(u, v) / hu;
  const double completeness = hv == 0.0 ? 1.0 : 1.0 - conditional_entropy(v, u) / hv;
  const double sum = homogeneity + completeness;
  if (sum == 0.0) return 0.0;
  return 2.0 * homogeneity * completeness / sum;
}

// ---------------------------------------------------------------------------
// Fairness balance, block densities, block log-likelihood.

inline double balance(const std::vector<int>& labels, int k,
                      const std::vector<int>& groups, int group_count) {
  if (group_count < 2) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int cluster = 0; cluster < k; ++cluster) {
    for (int g = 0; g < group_count; ++g) {
      for (int h = 0; h < group_count; ++h) {
        if (g == h) continue;
        int ng = 0, nh = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
          if (labels[i] != cluster) continue;
          if (groups[i] == g) ++ng;
          if (groups[i] == h) ++nh;
        }
        if (nh == 0) return 0.0;
        best = std::min(best, static_cast<double>(ng) / nh);
      }
    }
  }
  return best;
}

inline Eigen::MatrixXd block_density(const Eigen::MatrixXd& adjacency,
                                     const std::vector<int>& labels, int k) {
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(k, k);
  Eigen::MatrixXd pairs = Eigen::MatrixXd::Zero(k, k);
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int a = std::min(labels[i], labels[j]);
      const int b = std::max(labels[i], labels[j]);
      psi(a, b) += adjacency(i, j);
      pairs(a, b) += 1.0;
    }
  }
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      const double value = pairs(a, b) > 0.0 ? psi(a, b) / pairs(a, b) : 0.0;
      psi(a, b) = psi(b, a) = value;
    }
  return psi;
}

inline double block_loglik(const Eigen::MatrixXd& adjacency,
                           const std::vector<int>& labels,
                           const Eigen::MatrixXd& psi) {
  const int n = static_cast<int>(labels.size());
  double ll = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double m =
          std::clamp(psi(labels[i], labels[j]), 1e-12, 1.0 - 1e-12);
      ll += adjacency(i, j) * std::log(m) +
            (1.0 - adjacency(i, j)) * std::log(1.0 - m);
    }
  }
  return ll;
}

// ---------------------------------------------------------------------------
// Exhaustive two-way cut optimum.

// Max of y^T M y over all sign vectors; 2^n evaluations.
inline double best_cut_value(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  if (n > 20) throw std::invalid_argument("enumeration oracle too big");
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) y[i] = (mask >> i) & 1u ? 1.0 : -1.0;
    best = std::max(best, y.dot(m * y));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Splitting-solver subproblems, solved numerically.
//
// The library minimizes each block of the augmented Lagrangian
//   L(Z, P) = <B, Z> + alpha . (diag(Z) - 1) + <Gamma, P - Z>
//             + (rho/2) (||P - Z||_F^2 + ||diag(Z) - 1||^2) + beta ||P||_*
// in closed form.  The minimizers below attack the same objectives with
// generic one-dimensional searches and know nothing about those closed
// forms.

struct SubproblemData {
  Eigen::MatrixXd b;      // linear term on Z
  Eigen::MatrixXd p;      // fixed P for the Z-step
  Eigen::MatrixXd z;      // fixed Z for the P-step
  Eigen::MatrixXd gamma;  // split multiplier
  Eigen::VectorXd alpha;  // diagonal multiplier
  double rho = 1.0;
  double beta = 1.0;
};

inline double z_objective(const SubproblemData& d, const Eigen::MatrixXd& z) {
  double value = (d.b.array() * z.array()).sum();
  for (int i = 0; i < z.rows(); ++i) value += d.alpha[i] * (z(i, i) - 1.0);
  value += (d.gamma.array() * (d.p - z).array()).sum();
  value += 0.5 * d.rho * (d.p - z).squaredNorm();
  for (int i = 0; i < z.rows(); ++i)
    value += 0.5 * d.rho * (z(i, i) - 1.0) * (z(i, i) - 1.0);
  return value;
}

inline double p_objective(const SubproblemData& d, const Eigen::MatrixXd& p,
                          double nuclear) {
  double value = d.beta * nuclear;
  value += (d.gamma.array() * (p - d.z).array()).sum();
  value += 0.5 * d.rho * (p - d.z).squaredNorm();
  return value;
}

// Golden-section minimizer for a 1-D unimodal function on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, int iters = 200) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iters; ++it) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Z-step minimizer for 2x2 symmetric matrices: cyclic coordinate descent
// over (z00, z11, z01) with golden-section line searches.  The objective
// is strictly convex and quadratic, so this converges to the optimum.
inline Eigen::MatrixXd minimize_z_numeric(const SubproblemData& d) {
  double coords[3] = {0.0, 0.0, 0.0};  // z00, z11, z01
  const auto assemble = [](const double* c) {
    Eigen::MatrixXd z(2, 2);
    z << c[0], c[2], c[2], c[1];
    return z;
  };
  for (int round = 0; round < 80; ++round) {
    for (int axis = 0; axis < 3; ++axis) {
      const auto slice = [&](double t) {
        double c[3] = {coords[0], coords[1], coords[2]};
        c[axis] = t;
        return z_objective(d, assemble(c));
      };
      coords[axis] = golden_min(slice, -60.0, 60.0);
    }
  }
  return assemble(coords);
}

// P-step minimizer for symmetric 2x2 matrices over the PSD cone.  P is
// parameterized by a rotation angle and two nonnegative eigenvalues; for
// a fixed angle the optimal eigenvalues have an elementary per-axis
// solution, so a fine scan plus golden refinement over the angle alone
// finds the global minimum.
inline Eigen::MatrixXd minimize_p_numeric(const SubproblemData& d) {
  const auto eigenvalue = [&](const Eigen::Vector2d& q) {
    // argmin over t >= 0 of beta t + t q'Gq + rho/2 (t^2 - 2 t q'Zq)
    const double t =
        q.dot(d.z * q) - (d.beta + q.dot(d.gamma * q)) / d.rho;
    return std::max(t, 0.0);
  };
  const auto value_at = [&](double theta) {
    const Eigen::Vector2d q1(std::cos(theta), std::sin(theta));
    const Eigen::Vector2d q2(-std::sin(theta), std::cos(theta));
    const double t1 = eigenvalue(q1);
    const double t2 = eigenvalue(q2);
    const Eigen::MatrixXd p =
        t1 * q1 * q1.transpose() + t2 * q2 * q2.transpose();
    return p_objective(d, p, t1 + t2);
  };
  const int grid = 20000;
  double best_theta = 0.0;
  double best_value = value_at(0.0);
  for (int i = 1; i < grid; ++i) {
    const double theta = M_PI * i / grid;
    const double value = value_at(theta);
    if (value < best_value) {
      best_value = value;
      best_theta = theta;
    }
  }
  const double lo = best_theta - M_PI / grid;
  const double hi = best_theta + M_PI / grid;
  const double theta = golden_min(value_at, lo, hi);
  const Eigen::Vector2d q1(std::cos(theta), std::sin(theta));
  const Eigen::Vector2d q2(-std::sin(theta), std::cos(theta));
  return eigenvalue(q1) * q1 * q1.transpose() +
         eigenvalue(q2) * q2 * q2.transpose();
}

// Central-difference gradient of the Z-step objective at a point.
inline Eigen::MatrixXd z_gradient_fd(const SubproblemData& d,
                                     const Eigen::MatrixXd& z,
                                     double h = 1e-6) {
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(z.rows(), z.cols());
  for (int i = 0; i < z.rows(); ++i) {
    for (int j = 0; j < z.cols(); ++j) {
      Eigen::MatrixXd plus = z, minus = z;
      plus(i, j) += h;
      minus(i, j) -= h;
      if (i != j) {  // keep the perturbation symmetric
        plus(j, i) += h;
        minus(j, i) -= h;
      }
      grad(i, j) = (z_objective(d, plus) - z_objective(d, minus)) / (2.0 * h);
    }
  }
  return grad;
}

// Central-difference gradient of the P-step objective at an interior
// point of the PSD cone, where the nuclear norm reduces to the trace.
inline Eigen::MatrixXd p_gradient_fd(const SubproblemData& d,
                                     const Eigen::MatrixXd& p,
                                     double h = 1e-6) {
  const auto smooth = [&](const Eigen::MatrixXd& m) {
    return p_objective(d, m, m.trace());
  };
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.cols(); ++j) {
      Eigen::MatrixXd plus = p, minus = p;
      plus(i, j) += h;
      minus(i, j) -= h;
      if (i != j) {
        plus(j, i) += h;
        minus(j, i) -= h;
      }
      grad(i, j) = (smooth(plus) - smooth(minus)) / (2.0 * h);
    }
  }
  return grad;
}

// ---------------------------------------------------------------------------
// Non-dominated filtering over raw score pairs.

// Keeps (spec, temp) pairs not dominated by any other pair, where
// domination means at least as high on both coordinates and strictly
// higher on one.  Quadratic scan over the raw input.
inline std::vector<std::pair<double, double>> non_dominated(
    const std::vector<std::pair<double, double>>& scores) {
  std::vector<std::pair<double, double>> kept;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < scores.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool geq = scores[j].first >= scores[i].first &&
                       scores[j].second >= scores[i].second;
      const bool strict = scores[j].first > scores[i].first ||
                          scores[j].second > scores[i].second;
      dominated = geq && strict;
    }
    if (!dominated) kept.push_back(scores[i]);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

}  // namespace oracle

#endif  // FAIRSDP_TESTS_ORACLES_HPP_
