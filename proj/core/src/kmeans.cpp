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

#include "fairsdp/kmeans.hpp"

#include <limits>
#include <stdexcept>

#include "fairsdp/rng.hpp"

namespace fairsdp {
namespace {

constexpr double kMoveTol = 1e-9;
constexpr int kMaxIter = 300;

double assign(const Eigen::MatrixXd& rows, const Eigen::MatrixXd& centroids,
              std::vector<int>& labels) {
  double wcss = 0.0;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (Eigen::Index c = 0; c < centroids.rows(); ++c) {
      const double d = (rows.row(i) - centroids.row(c)).squaredNorm();
      if (d < best) {
        best = d;
        arg = static_cast<int>(c);
      }
    }
    labels[i] = arg;
    wcss += best;
  }
  return wcss;
}

Eigen::MatrixXd seed_centroids(const Eigen::MatrixXd& rows, int k, Rng& rng) {
  const Eigen::Index n = rows.rows();
  Eigen::MatrixXd centroids(k, rows.cols());
  centroids.row(0) = rows.row(static_cast<Eigen::Index>(rng.uniform_index(n)));
  Eigen::VectorXd dist2(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    dist2[i] = (rows.row(i) - centroids.row(0)).squaredNorm();
  }
  for (int c = 1; c < k; ++c) {
    const double total = dist2.sum();
    Eigen::Index pick;
    if (total <= 0.0) {
      // All remaining points sit on chosen centroids; any choice works.
      pick = static_cast<Eigen::Index>(rng.uniform_index(n));
    } else {
      double target = rng.uniform01() * total;
      pick = n - 1;
      for (Eigen::Index i = 0; i < n; ++i) {
        target -= dist2[i];
        if (target <= 0.0) {
          pick = i;
          break;
        }
      }
    }
    centroids.row(c) = rows.row(pick);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = (rows.row(i) - centroids.row(c)).squaredNorm();
      if (d < dist2[i]) dist2[i] = d;
    }
  }
  return centroids;
}

KmeansResult run_once(const Eigen::MatrixXd& rows, int k, Rng& rng) {
  const Eigen::Index n = rows.rows();
  KmeansResult result;
  result.centroids = seed_centroids(rows, k, rng);
  result.labels.assign(n, 0);
  double prev_wcss = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const double wcss = assign(rows, result.centroids, result.labels);
    // Lloyd steps cannot increase the objective; allow rounding slack.
    if (wcss > prev_wcss + 1e-9 * (1.0 + prev_wcss)) {
      throw std::logic_error("kmeans objective increased");
    }
    prev_wcss = wcss;

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, rows.cols());
    std::vector<int> counts(k, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      sums.row(result.labels[i]) += rows.row(i);
      ++counts[result.labels[i]];
    }
    // An emptied cluster grabs the point farthest from its centroid so
    // every centroid stays meaningful.
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      Eigen::Index farthest = 0;
      double best = -1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double d =
            (rows.row(i) - result.centroids.row(result.labels[i])).squaredNorm();
        if (d > best) {
          best = d;
          farthest = i;
        }
      }
      sums.row(result.labels[farthest]) -= rows.row(farthest);
      --counts[result.labels[farthest]];
      result.labels[farthest] = c;
      sums.row(c) = rows.row(farthest);
      counts[c] = 1;
    }
    double max_move = 0.0;
    for (int c = 0; c < k; ++c) {
      const Eigen::VectorXd updated = sums.row(c) / counts[c];
      max_move = std::max(max_move,
                          (updated.transpose() - result.centroids.row(c)).norm());
      result.centroids.row(c) = updated;
    }
    if (max_move < kMoveTol) break;
  }
  result.wcss = assign(rows, result.centroids, result.labels);
  return result;
}

}  // namespace

KmeansResult kmeans(const Eigen::MatrixXd& rows, int k, int restarts,
                    std::uint64_t seed) {
  if (rows.rows() == 0) throw std::invalid_argument("kmeans needs input rows");
  if (k < 1 || k > rows.rows()) {
    throw std::invalid_argument("kmeans needs 1 <= k <= number of rows");
  }
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  Rng rng(seed);
  KmeansResult best;
  best.wcss = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    KmeansResult candidate = run_once(rows, k, rng);
    if (candidate.wcss < best.wcss) best = candidate;
  }
  return best;
}

}  // namespace fairsdp
