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

#ifndef FAIRSDP_ADMM_HPP_
#define FAIRSDP_ADMM_HPP_

#include <vector>

#include "fairsdp/graph.hpp"
#include "fairsdp/spectral.hpp"

namespace fairsdp {

// Splitting solver for the relaxed clustering program
//   min_Z  Tr(B Z) + beta ||P||_*
//   s.t.   diag(Z) = 1,  P = Z,  P PSD,
// where B is the negated penalized matrix.  The diagonal constraint is
// handled by the multiplier alpha, the split by the multiplier Gamma,
// both with quadratic penalty rho.
struct AdmmConfig {
  double rho = 1.0;
  double beta = 1.0;
  int max_iter = 1000;
  double tol = 1e-6;
  SolverConfig solver;
  // Replay flags for a written-up variant of the update schedule, which
  // mixes the current Z into the P-step inner product but the previous Z
  // into its quadratic term, and uses the previous diagonal in the alpha
  // step.  Defaults use the freshest iterate everywhere.  Anchoring the
  // P-step at the previous Z (stale_p_prox) makes the iteration expand
  // instead of contract: the residuals grow geometrically and the solve
  // ends with SolverError once the iterates overflow.  stale_alpha alone
  // converges, just more slowly.  The flags exist so that behavior can
  // be reproduced and studied, not for production use.
  bool stale_p_prox = false;
  bool stale_alpha = false;
};

struct AdmmState {
  Eigen::MatrixXd z;
  Eigen::MatrixXd p;
  Eigen::VectorXd alpha;
  Eigen::MatrixXd gamma;
  int iteration = 0;
  double split_residual = 0.0;  // ||P - Z||_F
  double diag_residual = 0.0;   // ||diag(Z) - 1||_inf
};

struct AdmmTracePoint {
  int iteration;
  double split_residual;
  double diag_residual;
};

struct AdmmResult {
  AdmmState state;
  std::vector<AdmmTracePoint> trace;
  bool converged = false;
};

// One exact minimization of the augmented Lagrangian in Z with P and the
// multipliers fixed.  Off-diagonal: z_ij = p_ij + (gamma_ij - b_ij)/rho.
// Diagonal: z_ii = (rho (1 + p_ii) + gamma_ii - b_ii - alpha_i) / (2 rho).
void z_update(AdmmState& state, const Eigen::MatrixXd& b, const AdmmConfig& config);

// One exact minimization in P over the PSD cone: shrink the eigenvalues
// of (Z - Gamma/rho) by beta/rho and clip at zero.  With stale_p_prox the
// proximal point uses the Z from before the current z_update.
void p_update(AdmmState& state, const Eigen::MatrixXd& z_prev,
              const AdmmConfig& config);

// Full solve from the fixed start Z=0, P=0, Gamma=ones, alpha=1.  Stops
// when both residuals drop below tol or after max_iter iterations.
// Throws SolverError when non-finite values appear.
AdmmResult admm_solve(const Graph& g, const SensitiveAttributes& s,
                      const AdmmConfig& config);

// Same solve for an already-built penalized matrix.
AdmmResult admm_solve_penalized(const PenalizedMatrix& penalized,
                                const AdmmConfig& config);

struct RoundingResult {
  ClusterAssignment assignment;
  double leading_eigenvalue = 0.0;
  double second_eigenvalue = 0.0;
  // Set when the top two eigenvalues of P are within 1e-6 relative, in
  // which case the chosen direction is numerically ambiguous.
  bool low_confidence = false;
};

// Two-cluster rounding: sign pattern of the leading eigenvector of P.
RoundingResult round_assignment(const AdmmState& state);

}  // namespace fairsdp

#endif  // FAIRSDP_ADMM_HPP_
