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

#include "fairsdp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fairsdp/errors.hpp"

namespace fairsdp {
namespace {

struct GridPosition {
  double mu;
  double lambda;
  std::uint64_t seed;
};

void check_spec(const SweepSpec& spec) {
  if (spec.lambda_grid.empty()) throw std::invalid_argument("lambda grid is empty");
  for (std::size_t i = 1; i < spec.lambda_grid.size(); ++i) {
    if (!(spec.lambda_grid[i] > spec.lambda_grid[i - 1])) {
      throw std::invalid_argument("lambda grid must be strictly increasing");
    }
  }
  if (spec.mu_values.empty()) throw std::invalid_argument("mu list is empty");
  if (spec.seeds.empty()) throw std::invalid_argument("seed list is empty");
  if (spec.sens.size() != spec.graph.size()) {
    throw std::invalid_argument("attributes must cover the graph");
  }
  if (spec.truth && static_cast<int>(spec.truth->size()) != spec.graph.size()) {
    throw std::invalid_argument("truth must cover the graph");
  }
}

SweepPoint evaluate_point(const SweepSpec& spec, const GridPosition& pos) {
  SweepPoint point;
  point.mu = pos.mu;
  point.lambda = pos.lambda;
  point.seed = pos.seed;
  try {
    SolverConfig config = spec.solver;
    config.k = 2;
    config.mu = pos.mu;
    config.kmeans_seed = pos.seed;
    if (spec.sens.is_binary()) {
      config.lambda_weights = {pos.lambda};
    } else {
      config.lambda_weights.assign(spec.sens.group_count(), pos.lambda);
    }
    const PenalizedMatrix penalized = build_penalized(spec.graph, spec.sens, config);

    ClusterAssignment assignment = [&] {
      if (spec.algo == SweepAlgo::kSpectral) {
        return fair_spectral_binary(penalized, config.ordering);
      }
      AdmmConfig admm = spec.admm;
      admm.solver = config;
      const AdmmResult solved = admm_solve_penalized(penalized, admm);
      return round_assignment(solved.state).assignment;
    }();

    point.degenerate = assignment.is_degenerate();
    if (spec.truth) {
      point.temporal_ami = ami(*spec.truth, assignment.labels());
      point.temporal_ari = ari(*spec.truth, assignment.labels());
      point.temporal_v = v_measure(*spec.truth, assignment.labels());
    }
    point.specificity_ami = ami(spec.sens.groups(), assignment.labels());
    point.specificity_ari = ari(spec.sens.groups(), assignment.labels());
    point.specificity_v = v_measure(spec.sens.groups(), assignment.labels());
    point.balance = balance(assignment, spec.sens);
    point.assignment_hash = assignment_hash(assignment.labels());
  } catch (const std::exception& e) {
    point = SweepPoint{};
    point.mu = pos.mu;
    point.lambda = pos.lambda;
    point.seed = pos.seed;
    point.degenerate = true;
    point.assignment_hash = assignment_hash({});
    point.error = e.what();
  }
  return point;
}

double metric_specificity(const SweepPoint& p, SweepMetric m) {
  switch (m) {
    case SweepMetric::kAmi: return p.specificity_ami;
    case SweepMetric::kAri: return p.specificity_ari;
    case SweepMetric::kVMeasure: return p.specificity_v;
  }
  return 0.0;
}

double metric_temporal(const SweepPoint& p, SweepMetric m) {
  switch (m) {
    case SweepMetric::kAmi: return p.temporal_ami;
    case SweepMetric::kAri: return p.temporal_ari;
    case SweepMetric::kVMeasure: return p.temporal_v;
  }
  return 0.0;
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

std::vector<SweepPoint> run_sweep(const SweepSpec& spec) {
  check_spec(spec);
  std::vector<GridPosition> grid;
  for (double mu : spec.mu_values) {
    for (double lambda : spec.lambda_grid) {
      for (std::uint64_t seed : spec.seeds) {
        grid.push_back({mu, lambda, seed});
      }
    }
  }
  std::vector<SweepPoint> points(grid.size());

  int workers = spec.workers;
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
  }
  workers = std::min<int>(workers, static_cast<int>(grid.size()));

  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      points[i] = evaluate_point(spec, grid[i]);
    }
    return points;
  }

  // Fixed-size pool; each point lands in its grid slot, so the output
  // order never depends on scheduling.
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= grid.size()) return;
        points[i] = evaluate_point(spec, grid[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return points;
}

std::vector<SweepPoint> pareto_front(const std::vector<SweepPoint>& points,
                                     SweepMetric metric) {
  std::vector<SweepPoint> alive;
  for (const auto& p : points) {
    if (!p.degenerate && p.error.empty()) alive.push_back(p);
  }
  // Duplicate score pairs: keep the smallest |lambda| (then smaller
  // lambda, mu, seed for full determinism).
  std::stable_sort(alive.begin(), alive.end(), [&](const SweepPoint& a,
                                                   const SweepPoint& b) {
    const double sa = metric_specificity(a, metric), sb = metric_specificity(b, metric);
    if (sa != sb) return sa < sb;
    const double ta = metric_temporal(a, metric), tb = metric_temporal(b, metric);
    if (ta != tb) return ta < tb;
    if (std::abs(a.lambda) != std::abs(b.lambda))
      return std::abs(a.lambda) < std::abs(b.lambda);
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    if (a.mu != b.mu) return a.mu < b.mu;
    return a.seed < b.seed;
  });
  alive.erase(std::unique(alive.begin(), alive.end(),
                          [&](const SweepPoint& a, const SweepPoint& b) {
                            return metric_specificity(a, metric) ==
                                       metric_specificity(b, metric) &&
                                   metric_temporal(a, metric) ==
                                       metric_temporal(b, metric);
                          }),
              alive.end());

  std::vector<SweepPoint> front;
  for (const auto& candidate : alive) {
    const double cs = metric_specificity(candidate, metric);
    const double ct = metric_temporal(candidate, metric);
    bool dominated = false;
    for (const auto& other : alive) {
      const double os = metric_specificity(other, metric);
      const double ot = metric_temporal(other, metric);
      if (os >= cs && ot >= ct && (os > cs || ot > ct)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(candidate);
  }
  std::stable_sort(front.begin(), front.end(),
                   [&](const SweepPoint& a, const SweepPoint& b) {
                     return metric_specificity(a, metric) <
                            metric_specificity(b, metric);
                   });
  return front;
}

double tradeoff_auc(const std::vector<SweepPoint>& points, SweepMetric metric) {
  const std::vector<SweepPoint> front = pareto_front(points, metric);
  if (front.empty()) return 0.0;

  // Map to the tradeoff plane; equal x keeps the best y.
  std::map<double, double> curve;
  for (const auto& p : front) {
    const double x = 1.0 - std::clamp(metric_specificity(p, metric), 0.0, 1.0);
    const double y = std::clamp(metric_temporal(p, metric), 0.0, 1.0);
    auto [it, fresh] = curve.emplace(x, y);
    if (!fresh) it->second = std::max(it->second, y);
  }

  double auc = 0.0;
  double prev_x = 0.0;
  double prev_y = curve.begin()->second;  // flat extension to x = 0
  for (const auto& [x, y] : curve) {
    auc += 0.5 * (prev_y + y) * (x - prev_x);
    prev_x = x;
    prev_y = y;
  }
  auc += prev_y * (1.0 - prev_x);  // flat extension to x = 1
  return auc;
}

std::string assignment_hash(const std::vector<int>& labels) {
  // FNV-1a over the labels as 4 little-endian bytes each; stable across
  // platforms.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (int label : labels) {
    const auto u = static_cast<std::uint32_t>(label);
    for (int shift = 0; shift < 32; shift += 8) {
      h ^= (u >> shift) & 0xffu;
      h *= 0x100000001b3ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SweepAucSummary sweep_auc_summary(const std::vector<SweepPoint>& points) {
  return {tradeoff_auc(points, SweepMetric::kAmi),
          tradeoff_auc(points, SweepMetric::kAri),
          tradeoff_auc(points, SweepMetric::kVMeasure)};
}

void write_sweep_csv(const std::vector<SweepPoint>& points,
                     const SweepAucSummary& aucs, std::ostream& out) {
  out << "mu,lambda,seed,degenerate,temporal_ami,specificity_ami,"
         "temporal_ari,specificity_ari,temporal_v,specificity_v,balance,"
         "assignment_hash\n";
  for (const auto& p : points) {
    out << format_double(p.mu) << "," << format_double(p.lambda) << ","
        << p.seed << "," << (p.degenerate ? 1 : 0) << ","
        << format_double(p.temporal_ami) << ","
        << format_double(p.specificity_ami) << ","
        << format_double(p.temporal_ari) << ","
        << format_double(p.specificity_ari) << ","
        << format_double(p.temporal_v) << "," << format_double(p.specificity_v)
        << "," << format_double(p.balance) << "," << p.assignment_hash << "\n";
  }
  out << "# auc_ami=" << format_double(aucs.auc_ami)
      << ",auc_ari=" << format_double(aucs.auc_ari)
      << ",auc_v=" << format_double(aucs.auc_v) << "\n";
}

void save_sweep_csv(const std::vector<SweepPoint>& points,
                    const SweepAucSummary& aucs, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path);
  write_sweep_csv(points, aucs, out);
  if (!out) throw FileError("write failed for " + path);
}

SweepCsv load_sweep_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  SweepCsv result;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      SweepAucSummary aucs;
      if (std::sscanf(line.c_str(), "# auc_ami=%lf,auc_ari=%lf,auc_v=%lf",
                      &aucs.auc_ami, &aucs.auc_ari, &aucs.auc_v) == 3) {
        result.aucs = aucs;
      }
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 12) {
      throw FileError(path + ":" + std::to_string(lineno) +
                      ": expected 12 fields");
    }
    try {
      SweepPoint p;
      p.mu = std::stod(fields[0]);
      p.lambda = std::stod(fields[1]);
      p.seed = std::stoull(fields[2]);
      p.degenerate = std::stoi(fields[3]) != 0;
      p.temporal_ami = std::stod(fields[4]);
      p.specificity_ami = std::stod(fields[5]);
      p.temporal_ari = std::stod(fields[6]);
      p.specificity_ari = std::stod(fields[7]);
      p.temporal_v = std::stod(fields[8]);
      p.specificity_v = std::stod(fields[9]);
      p.balance = std::stod(fields[10]);
      p.assignment_hash = fields[11];
      result.points.push_back(p);
    } catch (const std::exception&) {
      throw FileError(path + ":" + std::to_string(lineno) + ": malformed row");
    }
  }
  if (!header_seen) throw FileError(path + ": missing header row");
  return result;
}

}  // namespace fairsdp
