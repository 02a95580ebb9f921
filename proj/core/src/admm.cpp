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

#include "fairsdp/admm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fairsdp/errors.hpp"
#include "fairsdp/numerics.hpp"

namespace fairsdp {
namespace {

void check_config(const AdmmConfig& config) {
  if (config.rho <= 0.0) throw std::invalid_argument("rho must be positive");
  if (config.beta < 0.0) throw std::invalid_argument("beta must be >= 0");
  if (config.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (config.tol <= 0.0) throw std::invalid_argument("tol must be positive");
}

void check_finite(const AdmmState& state) {
  if (!state.z.allFinite() || !state.p.allFinite() ||
      !state.alpha.allFinite() || !state.gamma.allFinite()) {
    throw SolverError("admm diverged: non-finite values at iteration " +
                      std::to_string(state.iteration));
  }
}

void check_symmetry(const AdmmState& state) {
  const double asym = std::max((state.z - state.z.transpose()).cwiseAbs().maxCoeff(),
                               (state.p - state.p.transpose()).cwiseAbs().maxCoeff());
  if (asym > 1e-12) {
    throw std::logic_error("admm iterates lost symmetry at iteration " +
                           std::to_string(state.iteration));
  }
}

}  // namespace

void z_update(AdmmState& state, const Eigen::MatrixXd& b, const AdmmConfig& config) {
  const double rho = config.rho;
  const Eigen::Index n = b.rows();
  state.z = state.p + (state.gamma - b) / rho;
  for (Eigen::Index i = 0; i < n; ++i) {
    state.z(i, i) = (rho * (1.0 + state.p(i, i)) + state.gamma(i, i) - b(i, i) -
                     state.alpha[i]) /
                    (2.0 * rho);
  }
}

void p_update(AdmmState& state, const Eigen::MatrixXd& z_prev,
              const AdmmConfig& config) {
  const Eigen::MatrixXd& prox_center = config.stale_p_prox ? z_prev : state.z;
  state.p = svt_psd(prox_center - state.gamma / config.rho,
                    config.beta / config.rho);
}

AdmmResult admm_solve_penalized(const PenalizedMatrix& penalized,
                                const AdmmConfig& config) {
  check_config(config);
  const Eigen::MatrixXd b = -penalized.matrix;
  const Eigen::Index n = b.rows();

  AdmmResult result;
  AdmmState& state = result.state;
  state.z = Eigen::MatrixXd::Zero(n, n);
  state.p = Eigen::MatrixXd::Zero(n, n);
  state.gamma = Eigen::MatrixXd::Ones(n, n);
  state.alpha = Eigen::VectorXd::Ones(n);

  for (int iter = 1; iter <= config.max_iter; ++iter) {
    state.iteration = iter;
    const Eigen::MatrixXd z_prev = state.z;
    const Eigen::VectorXd diag_prev = state.z.diagonal();

    z_update(state, b, config);
    p_update(state, z_prev, config);

    const Eigen::VectorXd& diag_for_alpha =
        config.stale_alpha ? diag_prev : state.z.diagonal();
    state.alpha += config.rho * (diag_for_alpha.array() - 1.0).matrix();
    state.gamma += config.rho * (state.p - state.z);

    state.split_residual = (state.p - state.z).norm();
    state.diag_residual = (state.z.diagonal().array() - 1.0).abs().maxCoeff();
    result.trace.push_back({iter, state.split_residual, state.diag_residual});

    check_finite(state);
    if (iter % 50 == 0) check_symmetry(state);

    if (state.split_residual < config.tol && state.diag_residual < config.tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

AdmmResult admm_solve(const Graph& g, const SensitiveAttributes& s,
                      const AdmmConfig& config) {
  return admm_solve_penalized(build_penalized(g, s, config.solver), config);
}

RoundingResult round_assignment(const AdmmState& state) {
  const Eigen::Index n = state.p.rows();
  if (n == 0) throw std::invalid_argument("empty state");

  double lambda1 = 0.0, lambda2 = 0.0;
  Eigen::VectorXd v1;
  bool need_full = false;
  try {
    auto [l1, u1] = power_iteration(state.p);
    lambda1 = l1;
    v1 = u1;
    // Deflate to reach the runner-up; P is PSD so the shifted matrix
    // keeps the rest of the spectrum.
    const Eigen::MatrixXd deflated =
        state.p - lambda1 * (v1 * v1.transpose());
    auto [l2, u2] = power_iteration(deflated);
    lambda2 = l2;
  } catch (const SolverError&) {
    need_full = true;
  }
  if (need_full) {
    // Slow convergence means near-equal leading eigenvalues; the dense
    // solver resolves them.
    const SymmetricEigen eig = sym_eig(state.p);
    lambda1 = eig.eigenvalues[0];
    lambda2 = n > 1 ? eig.eigenvalues[1] : 0.0;
    v1 = eig.eigenvectors.col(0);
  }

  std::vector<int> labels(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    labels[i] = v1[i] >= 0.0 ? 1 : 0;
  }
  RoundingResult out{ClusterAssignment(labels, 2), lambda1, lambda2, false};
  const double magnitude = std::max(std::abs(lambda1), std::abs(lambda2));
  out.low_confidence =
      magnitude == 0.0 || std::abs(lambda1 - lambda2) <= 1e-6 * magnitude;
  return out;
}

}  // namespace fairsdp
