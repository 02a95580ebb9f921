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

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fairsdp/errors.hpp"
#include "fairsdp/kmeans.hpp"
#include "fairsdp/numerics.hpp"
#include "fairsdp/rng.hpp"

using namespace fairsdp;

namespace {

Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m(i, j) = m(j, i) = rng.uniform(-1.0, 1.0);
    }
  }
  return m;
}

// Symmetric matrix with k leading eigenvalues of decisively larger
// magnitude (random signs) over a small bulk.  Raw random matrices have
// near-tied magnitudes at any cut, which no iterative scheme separates
// at tight tolerances, so the partial-solver tests use planted spectra.
Eigen::MatrixXd gapped_symmetric(int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd gauss(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gauss(i, j) = rng.uniform(-1.0, 1.0);
  const Eigen::MatrixXd q =
      Eigen::HouseholderQR<Eigen::MatrixXd>(gauss).householderQ();
  Eigen::VectorXd values(n);
  double magnitude = 3.0;
  for (int i = 0; i < n; ++i) {
    if (i < k) {
      values[i] = (rng.bernoulli(0.5) ? -1.0 : 1.0) * magnitude;
      magnitude *= 0.6;
    } else {
      values[i] = rng.uniform(-0.05, 0.05);
    }
  }
  Eigen::MatrixXd m = q * values.asDiagonal() * q.transpose();
  return 0.5 * (m + m.transpose());
}

}  // namespace

TEST_CASE("full eigendecomposition reconstructs and orders") {
  for (const int n : {1, 2, 5, 40, 120}) {
    const Eigen::MatrixXd m = random_symmetric(n, 100 + n);
    const SymmetricEigen eig = sym_eig(m);
    REQUIRE(eig.eigenvalues.size() == n);

    const Eigen::MatrixXd rebuilt = eig.eigenvectors *
                                    eig.eigenvalues.asDiagonal() *
                                    eig.eigenvectors.transpose();
    CHECK((rebuilt - m).norm() <= 1e-10 * std::max(1.0, m.norm()));
    const Eigen::MatrixXd gram =
        eig.eigenvectors.transpose() * eig.eigenvectors;
    CHECK((gram - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-10);
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(eig.eigenvalues[i] >= eig.eigenvalues[i + 1]);
    }
    // sign convention: dominant entry of each column is positive
    for (int c = 0; c < n; ++c) {
      int arg = 0;
      for (int r = 1; r < n; ++r) {
        if (std::abs(eig.eigenvectors(r, c)) >
            std::abs(eig.eigenvectors(arg, c))) {
          arg = r;
        }
      }
      CHECK(eig.eigenvectors(arg, c) >= 0.0);
    }
  }
}

TEST_CASE("eigendecomposition of a hand matrix") {
  // [[2,1],[1,2]] has eigenpairs (3, (1,1)/sqrt2) and (1, (1,-1)/sqrt2).
  Eigen::MatrixXd m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;
  const SymmetricEigen eig = sym_eig(m);
  CHECK(eig.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(eig.eigenvectors(0, 0) == doctest::Approx(r).epsilon(1e-12));
  CHECK(eig.eigenvectors(1, 0) == doctest::Approx(r).epsilon(1e-12));
  CHECK(eig.eigenvectors(0, 1) == doctest::Approx(r).epsilon(1e-12));
  CHECK(eig.eigenvectors(1, 1) == doctest::Approx(-r).epsilon(1e-12));
}

TEST_CASE("asymmetric input is rejected") {
  Eigen::MatrixXd m(2, 2);
  m << 0.0, 1.0, 0.5, 0.0;
  CHECK_THROWS_AS(sym_eig(m), std::invalid_argument);
}

TEST_CASE("sign canonicalization picks the dominant entry") {
  Eigen::VectorXd v(3);
  v << 0.1, -0.9, 0.2;
  canonicalize_sign(v);
  CHECK(v[1] == 0.9);

  Eigen::VectorXd tie(2);
  tie << -0.5, 0.5;  // tie on magnitude: lowest index wins
  canonicalize_sign(tie);
  CHECK(tie[0] == 0.5);
  CHECK(tie[1] == -0.5);
}

TEST_CASE("eigenvalue shrinkage matches the scalar map") {
  const Eigen::MatrixXd m = random_symmetric(25, 7);
  const double threshold = 0.8;
  const Eigen::MatrixXd out = svt_psd(m, threshold);

  CHECK((out - out.transpose()).norm() == 0.0);
  const SymmetricEigen before = sym_eig(m);
  const SymmetricEigen after = sym_eig(out);
  for (int i = 0; i < 25; ++i) {
    const double expected = std::max(before.eigenvalues[i] - threshold, 0.0);
    // both spectra are sorted descending, so positions correspond
    CHECK(after.eigenvalues[i] == doctest::Approx(expected).epsilon(1e-10));
    // re-decomposing the clipped matrix reintroduces rounding noise
    CHECK(after.eigenvalues[i] >= -1e-12);
  }
}

TEST_CASE("eigenvalue shrinkage on a diagonal hand case") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
  m.diagonal() << 2.0, 0.5, -1.0;
  const Eigen::MatrixXd out = svt_psd(m, 1.0);
  CHECK(out(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out(1, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(out(2, 2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power iteration finds the dominant eigenpair") {
  Eigen::MatrixXd m = random_symmetric(30, 12);
  m = (m * m.transpose()).eval();  // PSD with a clear top eigenvalue
  const auto [value, vector] = power_iteration(m);
  const SymmetricEigen eig = sym_eig(m);
  CHECK(value == doctest::Approx(eig.eigenvalues[0]).epsilon(1e-8));
  CHECK((m * vector - value * vector).norm() <= 1e-8 * m.norm());
  CHECK(vector.norm() == doctest::Approx(1.0).epsilon(1e-10));

  SUBCASE("zero matrix short-circuits") {
    const auto [zero_value, zero_vector] =
        power_iteration(Eigen::MatrixXd::Zero(4, 4));
    CHECK(zero_value == 0.0);
    CHECK(zero_vector.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("iteration cap raises") {
    CHECK_THROWS_AS(power_iteration(m, 1e-30, 2), SolverError);
  }
}

TEST_CASE("largest-magnitude eigenpairs match the full factorization") {
  for (const int n : {30, 150, 400}) {
    const int k = 4;
    const Eigen::MatrixXd m = gapped_symmetric(n, k, 900 + n);
    const SymmetricEigen partial = top_eig_abs(m, k, 1e-11);
    const SymmetricEigen full = sym_eig(m);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const double ma = std::abs(full.eigenvalues[a]);
      const double mb = std::abs(full.eigenvalues[b]);
      if (ma != mb) return ma > mb;
      return full.eigenvalues[a] > full.eigenvalues[b];
    });
    for (int i = 0; i < k; ++i) {
      CHECK(partial.eigenvalues[i] ==
            doctest::Approx(full.eigenvalues[order[i]]).epsilon(1e-8));
      const Eigen::VectorXd v = partial.eigenvectors.col(i);
      CHECK((m * v - partial.eigenvalues[i] * v).norm() <= 1e-8 * m.norm());
    }
    const Eigen::MatrixXd gram =
        partial.eigenvectors.transpose() * partial.eigenvectors;
    CHECK((gram - Eigen::MatrixXd::Identity(k, k)).norm() <= 1e-8);
  }
}

TEST_CASE("laplacian construction in both diagonal modes") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
  a(0, 1) = a(1, 0) = 1.0;
  a(1, 2) = a(2, 1) = 2.0;

  const Eigen::MatrixXd degree = build_laplacian(a).matrix;
  Eigen::MatrixXd expected(3, 3);
  expected << 1.0, -1.0, 0.0, -1.0, 3.0, -2.0, 0.0, -2.0, 2.0;
  CHECK((degree - expected).norm() == 0.0);
  // row sums of a degree Laplacian vanish
  CHECK(degree.rowwise().sum().norm() == 0.0);

  Eigen::MatrixXd with_diag = a;
  with_diag.diagonal() << 5.0, 6.0, 7.0;
  const Eigen::MatrixXd literal =
      build_laplacian(with_diag, LaplacianMode::kLiteralDiag).matrix;
  CHECK(literal(0, 0) == 0.0);   // diag(d) - m cancels on the diagonal
  CHECK(literal(0, 1) == -1.0);
}

TEST_CASE("kmeans recovers separated blobs") {
  Rng rng(55);
  Eigen::MatrixXd rows(60, 2);
  std::vector<int> truth(60);
  for (int i = 0; i < 60; ++i) {
    const int blob = i % 3;
    truth[i] = blob;
    rows(i, 0) = 10.0 * blob + rng.uniform(-0.5, 0.5);
    rows(i, 1) = -5.0 * blob + rng.uniform(-0.5, 0.5);
  }
  const KmeansResult result = kmeans(rows, 3, 5, 4);
  REQUIRE(static_cast<int>(result.labels.size()) == 60);
  // same blob -> same cluster, different blob -> different cluster
  for (int i = 0; i < 60; ++i) {
    for (int j = i + 1; j < 60; ++j) {
      CHECK((result.labels[i] == result.labels[j]) ==
            (truth[i] == truth[j]));
    }
  }
  const KmeansResult again = kmeans(rows, 3, 5, 4);
  CHECK(again.labels == result.labels);
  CHECK(again.wcss == result.wcss);
}

TEST_CASE("kmeans edge shapes") {
  Eigen::MatrixXd rows(4, 1);
  rows << 0.0, 1.0, 2.0, 3.0;
  SUBCASE("k = 1 puts everything together") {
    const KmeansResult result = kmeans(rows, 1, 3, 0);
    for (int label : result.labels) CHECK(label == 0);
    CHECK(result.centroids(0, 0) == doctest::Approx(1.5).epsilon(1e-12));
  }
  SUBCASE("k = rows isolates every point") {
    const KmeansResult result = kmeans(rows, 4, 3, 0);
    std::set<int> distinct(result.labels.begin(), result.labels.end());
    CHECK(distinct.size() == 4);
    CHECK(result.wcss == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("invalid k rejected") {
    CHECK_THROWS_AS(kmeans(rows, 0, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(kmeans(rows, 5, 3, 0), std::invalid_argument);
  }
}
