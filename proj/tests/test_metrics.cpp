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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "fairsdp/metrics.hpp"
#include "fairsdp/rng.hpp"
#include "oracles.hpp"

using namespace fairsdp;

namespace {

std::vector<int> random_labels(Rng& rng, int n, int k) {
  std::vector<int> labels(n);
  for (int& label : labels)
    label = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(k)));
  return labels;
}

}  // namespace

TEST_CASE("contingency table cross-tabulates observed labels") {
  const std::vector<int> u = {0, 0, 2, 2, 2};  // label 1 unused
  const std::vector<int> v = {1, 1, 1, 0, 0};
  const ContingencyTable t = build_contingency(u, v);
  REQUIRE(t.counts.rows() == 2);  // only two observed labels in u
  REQUIRE(t.counts.cols() == 2);
  CHECK(t.total == 5);
  CHECK(t.row_sums.sum() == 5);
  CHECK(t.col_sums.sum() == 5);
  CHECK(t.counts.sum() == 5);
  // u-label 0 pairs entirely with v-label 1
  CHECK(t.counts(0, 1) == 2);
  CHECK(t.counts(0, 0) == 0);
  CHECK(t.counts(1, 0) == 2);
  CHECK(t.counts(1, 1) == 1);
}

TEST_CASE("closed-form expected agreement equals the permutation average") {
  // validates the reference formula itself on exhaustively checkable sizes
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
      {{0, 0, 1, 1}, {0, 1, 0, 1}},
      {{0, 0, 0, 1, 1}, {0, 1, 2, 2, 1}},
      {{0, 1, 2, 0, 1, 2, 0}, {0, 0, 0, 1, 1, 1, 1}},
  };
  for (const auto& [u, v] : cases) {
    CHECK(oracle::expected_mi(u, v) ==
          doctest::Approx(oracle::expected_mi_by_permutation(u, v))
              .epsilon(1e-12));
  }
}

TEST_CASE("information scores match the reference formulas") {
  Rng rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    // n stays above the label-count cap so no draw can shatter both
    // labelings into singletons, where the adjustment is ill-posed
    const int n = 6 + static_cast<int>(rng.uniform_index(36));
    const int ku = 1 + static_cast<int>(rng.uniform_index(5));
    const int kv = 1 + static_cast<int>(rng.uniform_index(5));
    const auto u = random_labels(rng, n, ku);
    const auto v = random_labels(rng, n, kv);
    CAPTURE(n);
    CAPTURE(trial);
    CHECK(ami(u, v) == doctest::Approx(oracle::ami(u, v)).epsilon(1e-10));
    CHECK(ari(u, v) == doctest::Approx(oracle::ari(u, v)).epsilon(1e-10));
    CHECK(v_measure(u, v) ==
          doctest::Approx(oracle::v_measure(u, v)).epsilon(1e-10));
  }
}

TEST_CASE("perfect agreement scores one") {
  const std::vector<int> u = {0, 1, 0, 2, 1, 2};
  CHECK(ami(u, u) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ari(u, u) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v_measure(u, u) == doctest::Approx(1.0).epsilon(1e-12));
  // relabeling does not matter
  const std::vector<int> relabeled = {5, 3, 5, 0, 3, 0};
  CHECK(ami(u, relabeled) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ari(u, relabeled) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("crossed halves land on the known pair-counting value") {
  // 2x2 contingency of all ones: no pair survives in both partitions
  const std::vector<int> u = {0, 0, 1, 1};
  const std::vector<int> v = {0, 1, 0, 1};
  CHECK(ari(u, v) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(v_measure(u, v) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(ami(u, v)) <= 1.0);
}

TEST_CASE("degenerate labelings follow the pinned conventions") {
  const std::vector<int> flat = {0, 0, 0, 0};
  const std::vector<int> mixed = {0, 1, 0, 1};
  const std::vector<int> singletons = {0, 1, 2, 3};

  SUBCASE("two constant labelings") {
    CHECK(ami(flat, flat) == 0.0);
    CHECK(ari(flat, flat) == 0.0);
    // both entropies vanish, so both component terms are 1
    CHECK(v_measure(flat, flat) == 1.0);
  }
  SUBCASE("constant against informative") {
    CHECK(ami(flat, mixed) == 0.0);
    CHECK(ari(flat, mixed) == 0.0);
  }
  SUBCASE("all-singleton twins are the identical partition") {
    // the adjusted information score is ill-posed here (its expected
    // value meets the entropy), so only the pair-counting score is pinned
    CHECK(ari(singletons, singletons) == 1.0);
  }
  SUBCASE("constant against all-singletons") {
    CHECK(ari(flat, singletons) == 0.0);
  }
}

TEST_CASE("balance reads off group ratios per cluster") {
  Eigen::VectorXi signs(6);
  signs << 1, -1, 1, -1, 1, -1;
  const auto s = SensitiveAttributes::binary(signs);

  SUBCASE("perfectly mixed clusters balance to one") {
    const ClusterAssignment c({0, 0, 0, 0, 1, 1}, 2);
    // cluster 0: two of each group; cluster 1: one of each
    CHECK(balance(c, s) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("uneven mixing takes the worst ratio") {
    const ClusterAssignment c({0, 0, 0, 0, 0, 1}, 2);
    // cluster 0 holds 3 of group + and 2 of group -; cluster 1 only one -
    CHECK(balance(c, s) == 0.0);
  }
  SUBCASE("matches the brute-force scan on random data") {
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 6 + static_cast<int>(rng.uniform_index(20));
      Eigen::VectorXi raw(n);
      std::vector<int> groups(n);
      for (int i = 0; i < n; ++i) {
        const bool plus = rng.bernoulli(0.5);
        raw[i] = plus ? 1 : -1;
        groups[i] = plus ? 1 : 0;
      }
      const auto attr = SensitiveAttributes::binary(raw);
      const int k = 2 + static_cast<int>(rng.uniform_index(3));
      std::vector<int> labels(n);
      for (int& label : labels)
        label = static_cast<int>(rng.uniform_index(k));
      // skip draws that miss a cluster id entirely
      std::vector<int> seen(k, 0);
      for (int label : labels) seen[label] = 1;
      bool all = true;
      for (int flag : seen) all = all && flag == 1;
      if (!all) continue;
      const ClusterAssignment c(labels, k);
      CHECK(balance(c, attr) ==
            doctest::Approx(oracle::balance(labels, k, groups, 2))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("block densities come out as weight means") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
  a(0, 1) = a(1, 0) = 1.0;
  a(0, 2) = a(2, 0) = 0.5;
  const Graph g(a);
  const ClusterAssignment c({0, 0, 1, 1}, 2);
  const Eigen::MatrixXd psi = estimate_psi(g, c);
  CHECK(psi(0, 0) == doctest::Approx(1.0).epsilon(1e-12));   // one pair
  CHECK(psi(1, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(psi(0, 1) == doctest::Approx(0.125).epsilon(1e-12));  // 0.5 / 4
  CHECK(psi(1, 0) == psi(0, 1));

  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 5 + static_cast<int>(rng.uniform_index(12));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        m(i, j) = m(j, i) = rng.bernoulli(0.4) ? rng.uniform01() : 0.0;
    std::vector<int> labels(n);
    for (int& label : labels) label = static_cast<int>(rng.uniform_index(3));
    labels[0] = 0; labels[1] = 1; labels[2] = 2;  // keep all ids present
    const ClusterAssignment c3(labels, 3);
    const Eigen::MatrixXd mine = estimate_psi(Graph(m), c3);
    const Eigen::MatrixXd ref = oracle::block_density(m, labels, 3);
    CHECK((mine - ref).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("block likelihood sums pairwise bernoulli terms") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
  a(0, 1) = a(1, 0) = 1.0;
  const Graph g(a);
  const ClusterAssignment c({0, 0, 1}, 2);
  Eigen::MatrixXd psi(2, 2);
  psi << 0.8, 0.1, 0.1, 0.6;
  // pairs: (0,1) in-block weight 1, (0,2) and (1,2) cross weight 0
  const double expected = std::log(0.8) + 2.0 * std::log(0.9);
  CHECK(sbm_loglik(g, c, psi) == doctest::Approx(expected).epsilon(1e-12));

  SUBCASE("extreme probabilities are clamped, not infinite") {
    Eigen::MatrixXd hard(2, 2);
    hard << 1.0, 0.0, 0.0, 1.0;
    const double value = sbm_loglik(g, c, hard);
    CHECK(std::isfinite(value));
  }
  SUBCASE("matches the reference sum on random data") {
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 4 + static_cast<int>(rng.uniform_index(10));
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          m(i, j) = m(j, i) = rng.bernoulli(0.5) ? 1.0 : 0.0;
      std::vector<int> labels(n);
      for (int& label : labels) label = static_cast<int>(rng.uniform_index(2));
      labels[0] = 0; labels[1] = 1;
      Eigen::MatrixXd p(2, 2);
      const double off = rng.uniform01();
      p << rng.uniform01(), off, off, rng.uniform01();
      const ClusterAssignment cr(labels, 2);
      CHECK(sbm_loglik(Graph(m), cr, p) ==
            doctest::Approx(oracle::block_loglik(m, labels, p)).epsilon(1e-10));
    }
  }
}

TEST_CASE("score report carries the agreed fields") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
  a(0, 1) = a(1, 0) = 1.0;
  a(2, 3) = a(3, 2) = 1.0;
  const Graph g(a);
  Eigen::VectorXi signs(4);
  signs << 1, -1, 1, -1;
  const auto s = SensitiveAttributes::binary(signs);
  const std::vector<int> truth = {0, 0, 1, 1};
  const ClusterAssignment pred({0, 0, 1, 1}, 2);
  SolverConfig config;
  const PenalizedMatrix pen = build_penalized(g, s, config);

  const ScoreReport full = score_report(pred, &truth, s, &pen);
  REQUIRE(full.temporal.has_value());
  CHECK(full.temporal->ami == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(full.specificity.ami ==
        doctest::Approx(ami(pred.labels(), {1, 0, 1, 0})).epsilon(1e-12));
  CHECK(full.balance == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(full.objective.has_value());
  CHECK(*full.objective ==
        doctest::Approx(objective_value(pen, pred)).epsilon(1e-12));

  const ScoreReport bare = score_report(pred, nullptr, s, nullptr);
  CHECK_FALSE(bare.temporal.has_value());
  CHECK_FALSE(bare.objective.has_value());

  const ClusterAssignment three({0, 1, 2, 2}, 3);
  const ScoreReport no_objective = score_report(three, &truth, s, &pen);
  CHECK_FALSE(no_objective.objective.has_value());
}
