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

#include "fairsdp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fairsdp/errors.hpp"
#include "fairsdp/rng.hpp"

namespace fairsdp {
namespace {

void check_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-10 * scale) {
        throw std::invalid_argument("matrix must be symmetric");
      }
    }
  }
}

}  // namespace

void canonicalize_sign(Eigen::VectorXd& v) {
  Eigen::Index pivot = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > best) {
      best = mag;
      pivot = i;
    }
  }
  if (v[pivot] < 0.0) v = -v;
}

SymmetricEigen sym_eig(const Eigen::MatrixXd& m) {
  check_symmetric(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw SolverError("eigendecomposition did not converge");
  }
  const Eigen::Index n = m.rows();
  SymmetricEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // The backend sorts ascending; flip to descending.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues[i] = solver.eigenvalues()[n - 1 - i];
    out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    Eigen::VectorXd v = out.eigenvectors.col(i);
    canonicalize_sign(v);
    out.eigenvectors.col(i) = v;
  }
  return out;
}

Eigen::MatrixXd svt_psd(const Eigen::MatrixXd& m, double threshold) {
  if (threshold < 0.0) throw std::invalid_argument("threshold must be >= 0");
  const SymmetricEigen eig = sym_eig(m);
  const Eigen::Index n = m.rows();
  Eigen::VectorXd shrunk(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    shrunk[i] = std::max(eig.eigenvalues[i] - threshold, 0.0);
  }
  Eigen::MatrixXd out =
      eig.eigenvectors * shrunk.asDiagonal() * eig.eigenvectors.transpose();
  // Kill the rounding asymmetry from the triple product.
  out = 0.5 * (out + out.transpose()).eval();
  return out;
}

std::pair<double, Eigen::VectorXd> power_iteration(const Eigen::MatrixXd& m,
                                                   double tol, int max_iter) {
  check_symmetric(m);
  const Eigen::Index n = m.rows();
  const double scale = m.norm();
  if (scale == 0.0) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v[0] = 1.0;
    return {0.0, v};
  }
  // Fixed-seed start so runs are reproducible; a random direction is
  // almost surely not orthogonal to the leading eigenvector.
  Rng rng(0x9e3779b97f4a7c15ull);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.uniform(-1.0, 1.0);
  v.normalize();
  double lambda = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    Eigen::VectorXd w = m * v;
    const double norm = w.norm();
    if (norm == 0.0) {
      // v landed in the null space; restart from a fresh direction.
      for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.uniform(-1.0, 1.0);
      v.normalize();
      continue;
    }
    v = w / norm;
    lambda = v.dot(m * v);
    if ((m * v - lambda * v).norm() < tol * scale) {
      canonicalize_sign(v);
      lambda = v.dot(m * v);
      return {lambda, v};
    }
  }
  throw SolverError("power iteration did not converge in " +
                    std::to_string(max_iter) + " iterations");
}

LaplacianMatrix build_laplacian(const Eigen::MatrixXd& m, LaplacianMode mode) {
  check_symmetric(m);
  Eigen::VectorXd d;
  switch (mode) {
    case LaplacianMode::kDegree:
      d = m.rowwise().sum();
      break;
    case LaplacianMode::kLiteralDiag:
      d = m.diagonal();
      break;
  }
  Eigen::MatrixXd l = -m;
  l.diagonal() += d;
  return {l};
}

SymmetricEigen top_eig_abs(const Eigen::MatrixXd& m, int k, double tol,
                           int max_sweeps) {
  check_symmetric(m);
  const Eigen::Index n = m.rows();
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  const double scale = std::max(m.norm(), 1e-300);

  // Extra directions speed up convergence of the leading k and absorb
  // clustered eigenvalues near the cut.
  const Eigen::Index block = std::min<Eigen::Index>(n, k + 6);
  Rng rng(0x51a7b2c9d4e8f013ull);
  Eigen::MatrixXd q(n, block);
  for (Eigen::Index j = 0; j < block; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) q(i, j) = rng.uniform(-1.0, 1.0);
  }
  q = Eigen::HouseholderQR<Eigen::MatrixXd>(q).householderQ() *
      Eigen::MatrixXd::Identity(n, block);

  Eigen::VectorXd ritz_values(block);
  Eigen::MatrixXd ritz_vectors(n, block);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Eigen::MatrixXd z = m * q;
    q = Eigen::HouseholderQR<Eigen::MatrixXd>(z).householderQ() *
        Eigen::MatrixXd::Identity(n, block);
    // Rayleigh-Ritz on the current subspace resolves signs and near-ties
    // that plain power iterations cannot separate.
    const Eigen::MatrixXd projected = q.transpose() * m * q;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(projected);
    if (small.info() != Eigen::Success) {
      throw SolverError("subspace iteration: projected solve failed");
    }
    std::vector<Eigen::Index> order(block);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      const double ma = std::abs(small.eigenvalues()[a]);
      const double mb = std::abs(small.eigenvalues()[b]);
      if (ma != mb) return ma > mb;
      return small.eigenvalues()[a] > small.eigenvalues()[b];
    });
    for (Eigen::Index j = 0; j < block; ++j) {
      ritz_values[j] = small.eigenvalues()[order[j]];
      ritz_vectors.col(j) = q * small.eigenvectors().col(order[j]);
    }
    bool converged = true;
    for (int j = 0; j < k; ++j) {
      const double res =
          (m * ritz_vectors.col(j) - ritz_values[j] * ritz_vectors.col(j)).norm();
      if (res > tol * scale) {
        converged = false;
        break;
      }
    }
    if (converged) {
      SymmetricEigen out;
      out.eigenvalues.resize(k);
      out.eigenvectors.resize(n, k);
      for (int j = 0; j < k; ++j) {
        out.eigenvalues[j] = ritz_values[j];
        Eigen::VectorXd v = ritz_vectors.col(j).normalized();
        canonicalize_sign(v);
        out.eigenvectors.col(j) = v;
      }
      return out;
    }
  }
  throw SolverError("subspace iteration did not converge in " +
                    std::to_string(max_sweeps) + " sweeps");
}

}  // namespace fairsdp
