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

#ifndef FAIRSDP_NUMERICS_HPP_
#define FAIRSDP_NUMERICS_HPP_

#include <Eigen/Dense>
#include <utility>

namespace fairsdp {

// Full eigendecomposition of a symmetric matrix.
//  - eigenvalues sorted descending by algebraic value;
//  - eigenvectors in matching columns, unit norm, orthonormal;
//  - sign convention: in each eigenvector the entry of largest magnitude
//    (lowest index on ties) is positive, so results are reproducible.
struct SymmetricEigen {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

// Input must be symmetric within 1e-10 relative; throws
// std::invalid_argument otherwise and SolverError if the backend fails.
SymmetricEigen sym_eig(const Eigen::MatrixXd& m);

// Applies the deterministic sign convention of sym_eig to one vector.
void canonicalize_sign(Eigen::VectorXd& v);

// Singular value thresholding restricted to the PSD cone: eigenvalues of
// the symmetric input are shrunk to max(lambda - threshold, 0) and the
// matrix is rebuilt.  The result is symmetric PSD.  threshold >= 0.
Eigen::MatrixXd svt_psd(const Eigen::MatrixXd& m, double threshold);

// Leading eigenpair of a symmetric PSD matrix by power iteration from a
// fixed pseudorandom start vector.  Converged when the residual
// ||m v - lambda v|| drops below tol * ||m||_F.  Throws SolverError when
// max_iter is exhausted first.  The eigenvector follows the sym_eig sign
// convention.
std::pair<double, Eigen::VectorXd> power_iteration(const Eigen::MatrixXd& m,
                                                   double tol = 1e-10,
                                                   int max_iter = 5000);

enum class LaplacianMode {
  kDegree,       // diag(row sums of m) - m
  kLiteralDiag,  // diag(diagonal of m) - m
};

struct LaplacianMatrix {
  Eigen::MatrixXd matrix;
};

LaplacianMatrix build_laplacian(const Eigen::MatrixXd& m,
                                LaplacianMode mode = LaplacianMode::kDegree);

// The k eigenpairs of largest magnitude, found by blocked subspace
// iteration with a Rayleigh-Ritz extraction.  Much cheaper than sym_eig
// when k << n and the matrix has a thin dominant spectrum.  Pairs are
// ordered by |eigenvalue| descending and satisfy the same residual and
// sign conventions as sym_eig.  Throws SolverError if the requested
// accuracy is not reached; callers can then fall back to sym_eig.
SymmetricEigen top_eig_abs(const Eigen::MatrixXd& m, int k, double tol = 1e-9,
                           int max_sweeps = 200);

}  // namespace fairsdp

#endif  // FAIRSDP_NUMERICS_HPP_
