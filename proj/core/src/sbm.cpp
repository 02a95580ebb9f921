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

#include "fairsdp/sbm.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fairsdp/rng.hpp"

namespace fairsdp {
namespace {

std::vector<int> block_labels(const std::vector<int>& sizes) {
  std::vector<int> labels;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (sizes[b] <= 0) throw std::invalid_argument("block sizes must be positive");
    labels.insert(labels.end(), sizes[b], static_cast<int>(b));
  }
  return labels;
}

void check_range(std::pair<double, double> r, const char* name) {
  if (!(r.first <= r.second) || r.first < 0.0 || r.second > 1.0) {
    throw std::invalid_argument(std::string(name) + " must satisfy 0 <= lo <= hi <= 1");
  }
}

}  // namespace

GeneratedGraph generate_sbm(const SbmParams& params) {
  const int k = static_cast<int>(params.sizes.size());
  if (k == 0) throw std::invalid_argument("sbm needs at least one block");
  if (params.psi.rows() != k || params.psi.cols() != k) {
    throw std::invalid_argument("psi dimension must match the number of blocks");
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const double p = params.psi(a, b);
      if (!std::isfinite(p) || p < 0.0 || p > 1.0 || p != params.psi(b, a)) {
        throw std::invalid_argument("psi must be symmetric with entries in [0,1]");
      }
    }
  }
  const auto truth = block_labels(params.sizes);
  const int n = static_cast<int>(truth.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Rng rng(params.seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(params.psi(truth[i], truth[j]))) {
        a(i, j) = 1.0;
        a(j, i) = 1.0;
      }
    }
  }
  return {Graph(a), truth};
}

GeneratedGraph generate_weighted_two_cluster(const WeightedTwoClusterParams& params) {
  if (params.sizes.first <= 0 || params.sizes.second <= 0) {
    throw std::invalid_argument("both cluster sizes must be positive");
  }
  check_range(params.within_range, "within_range");
  check_range(params.between_range, "between_range");
  const auto truth = block_labels({params.sizes.first, params.sizes.second});
  const int n = static_cast<int>(truth.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Rng rng(params.seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& range =
          truth[i] == truth[j] ? params.within_range : params.between_range;
      const double draw = rng.uniform(range.first, range.second);
      double w;
      if (params.bernoulli) {
        w = rng.bernoulli(draw) ? 1.0 : 0.0;
      } else {
        w = draw;
      }
      a(i, j) = w;
      a(j, i) = w;
    }
  }
  return {Graph(a), truth};
}

SensitiveAttributes sample_sensitive(int n, double p, std::uint64_t seed,
                                     double correlation,
                                     const std::vector<int>* truth) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
  if (correlation < 0.0 || correlation > 1.0) {
    throw std::invalid_argument("correlation must be in [0,1]");
  }
  if (correlation > 0.0 && (truth == nullptr || static_cast<int>(truth->size()) != n)) {
    throw std::invalid_argument("correlation > 0 needs ground-truth labels");
  }
  Rng rng(seed);
  Eigen::VectorXi s(n);
  for (int i = 0; i < n; ++i) {
    if (correlation > 0.0 && rng.bernoulli(correlation)) {
      s[i] = (*truth)[i] == 0 ? -1 : 1;
    } else {
      s[i] = rng.bernoulli(p) ? 1 : -1;
    }
  }
  return SensitiveAttributes::binary(s);
}

}  // namespace fairsdp
