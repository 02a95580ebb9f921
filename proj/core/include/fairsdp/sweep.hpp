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

#ifndef FAIRSDP_SWEEP_HPP_
#define FAIRSDP_SWEEP_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fairsdp/admm.hpp"
#include "fairsdp/graph.hpp"
#include "fairsdp/metrics.hpp"

namespace fairsdp {

enum class SweepAlgo { kSpectral, kAdmm };

// Grid evaluation of the two-cluster solver over (mu, lambda, seed).
struct SweepSpec {
  Graph graph;
  SensitiveAttributes sens;
  std::optional<std::vector<int>> truth;
  std::vector<double> lambda_grid;   // strictly increasing
  std::vector<double> mu_values = {1.0};
  std::vector<std::uint64_t> seeds = {0};
  SweepAlgo algo = SweepAlgo::kSpectral;
  SolverConfig solver;               // lambda/mu/seed overridden per point
  AdmmConfig admm;                   // used when algo == kAdmm
  int workers = 0;                   // 0 = hardware concurrency
};

struct SweepPoint {
  double mu = 0.0;
  double lambda = 0.0;
  std::uint64_t seed = 0;
  bool degenerate = false;
  double temporal_ami = 0.0;
  double specificity_ami = 0.0;
  double temporal_ari = 0.0;
  double specificity_ari = 0.0;
  double temporal_v = 0.0;
  double specificity_v = 0.0;
  double balance = 0.0;
  std::string assignment_hash;  // 16 hex digits, FNV-1a over the labels
  std::string error;            // non-empty when the solver failed
};

// Points come back ordered by (mu, lambda, seed) regardless of worker
// scheduling, and identical specs produce identical points.  A solver
// failure is recorded on its point (degenerate, zero scores, error set)
// rather than aborting the sweep.
std::vector<SweepPoint> run_sweep(const SweepSpec& spec);

enum class SweepMetric { kAmi, kAri, kVMeasure };

// Non-dominated subset: a point is dropped when another scores at least
// as high on both the specificity and the temporal value of the chosen
// metric (strictly higher on one).  Degenerate points are dropped first;
// duplicate score pairs keep the point with the smallest |lambda|.
// Output in ascending specificity order.
std::vector<SweepPoint> pareto_front(const std::vector<SweepPoint>& points,
                                     SweepMetric metric = SweepMetric::kAmi);

// Area under the tradeoff curve: frontier points are mapped to
// (x, y) = (1 - specificity, temporal) with scores clamped to [0, 1],
// then integrated by trapezoid with flat extensions to x = 0 and x = 1.
// All points degenerate gives 0.  Result in [0, 1].
double tradeoff_auc(const std::vector<SweepPoint>& points, SweepMetric metric);

// FNV-1a 64-bit digest of a label vector, as 16 hex digits.
std::string assignment_hash(const std::vector<int>& labels);

struct SweepAucSummary {
  double auc_ami = 0.0;
  double auc_ari = 0.0;
  double auc_v = 0.0;
};

SweepAucSummary sweep_auc_summary(const std::vector<SweepPoint>& points);

// CSV with one row per point and a trailing comment line carrying the
// three AUC values.  Numbers are printed with fixed formatting so equal
// sweeps serialize byte-identically.
void write_sweep_csv(const std::vector<SweepPoint>& points,
                     const SweepAucSummary& aucs, std::ostream& out);
void save_sweep_csv(const std::vector<SweepPoint>& points,
                    const SweepAucSummary& aucs, const std::string& path);

struct SweepCsv {
  std::vector<SweepPoint> points;
  std::optional<SweepAucSummary> aucs;
};

SweepCsv load_sweep_csv(const std::string& path);

}  // namespace fairsdp

#endif  // FAIRSDP_SWEEP_HPP_
