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

// fairsdp: generate synthetic instances, cluster them under a fairness
// penalty, score the result, sweep the penalty weight, and render the
// tradeoff chart.  Exit codes are a stable contract for scripting:
// 0 success, 2 usage error, 3 solver failure, 4 file error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairsdp/admm.hpp"
#include "fairsdp/errors.hpp"
#include "fairsdp/graph.hpp"
#include "fairsdp/graph_io.hpp"
#include "fairsdp/metrics.hpp"
#include "fairsdp/plot.hpp"
#include "fairsdp/sbm.hpp"
#include "fairsdp/spectral.hpp"
#include "fairsdp/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitFile = 4;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fairsdp::FileError(path + ": cannot open for writing");
  out << body;
  if (!out) throw fairsdp::FileError(path + ": write failed");
}

int count_edges(const fairsdp::Graph& g) {
  int edges = 0;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.adjacency()(i, j) != 0.0) ++edges;
  return edges;
}

struct GenerateArgs {
  std::string model;
  std::vector<int> sizes;
  double p_in = -1.0;
  double p_out = -1.0;
  std::vector<double> w_in;
  std::vector<double> w_out;
  double sens_p = 0.5;
  std::uint64_t seed = 0;
  std::string out_prefix;
};

int run_generate(const GenerateArgs& a, bool quiet) {
  fairsdp::GeneratedGraph gen = [&] {
    if (a.model == "sbm") {
      if (a.p_in < 0.0 || a.p_out < 0.0)
        throw CLI::ValidationError("--model sbm requires --p-in and --p-out");
      if (!a.w_in.empty() || !a.w_out.empty())
        throw CLI::ValidationError(
            "--w-in/--w-out conflict with --model sbm; use --p-in/--p-out");
      const int k = static_cast<int>(a.sizes.size());
      Eigen::MatrixXd psi = Eigen::MatrixXd::Constant(k, k, a.p_out);
      psi.diagonal().setConstant(a.p_in);
      return fairsdp::generate_sbm({a.sizes, psi, a.seed});
    }
    if (a.p_in >= 0.0 || a.p_out >= 0.0)
      throw CLI::ValidationError(
          "--p-in/--p-out conflict with --model weighted2; use --w-in/--w-out");
    if (a.w_in.size() != 2 || a.w_out.size() != 2)
      throw CLI::ValidationError(
          "--model weighted2 requires --w-in lo,hi and --w-out lo,hi");
    if (a.sizes.size() != 2)
      throw CLI::ValidationError("--model weighted2 requires exactly two sizes");
    fairsdp::WeightedTwoClusterParams params;
    params.sizes = {a.sizes[0], a.sizes[1]};
    params.within_range = {a.w_in[0], a.w_in[1]};
    params.between_range = {a.w_out[0], a.w_out[1]};
    params.seed = a.seed;
    return fairsdp::generate_weighted_two_cluster(params);
  }();

  const int n = gen.graph.size();
  // The attribute gets its own stream so that regenerating with the same
  // seed cannot entangle graph edges and group membership.
  fairsdp::SensitiveAttributes sens =
      fairsdp::sample_sensitive(n, a.sens_p, a.seed + 1);

  fairsdp::save_edge_list(gen.graph, a.out_prefix + ".el");
  fairsdp::save_labels(gen.truth, a.out_prefix + ".truth.csv");
  fairsdp::save_sensitive(sens, a.out_prefix + ".sens.csv");

  if (!quiet) {
    int minus = 0;
    for (int i = 0; i < n; ++i)
      if (sens.group_of(i) == 0) ++minus;
    std::cout << "generate: n=" << n << " edges=" << count_edges(gen.graph)
              << " groups=" << minus << "/" << (n - minus) << " prefix="
              << a.out_prefix << "\n";
  }
  return 0;
}

struct ClusterArgs {
  std::string graph_path;
  std::string sens_path;
  std::string out_path;
  std::string algo = "svd";
  std::string strategy = "laplacian";
  double lambda = 0.0;
  double mu = 1.0;
  int k = 2;
  double rho = 1.0;
  double beta = 1.0;
  int max_iter = 1000;
  double tol = 1e-6;
  std::string trace_path;
};

fairsdp::SolverConfig solver_config_for(const ClusterArgs& a,
                                        const fairsdp::SensitiveAttributes& s) {
  fairsdp::SolverConfig config;
  config.lambda_weights.assign(s.is_binary() ? 1 : s.group_count(), a.lambda);
  config.mu = a.mu;
  config.k = a.k;
  config.strategy = a.strategy == "bisect"
                        ? fairsdp::MultiKStrategy::kRecursiveBisection
                        : fairsdp::MultiKStrategy::kLaplacianKmeans;
  return config;
}

int run_cluster(const ClusterArgs& a, bool quiet) {
  if (a.algo == "admm" && a.k != 2)
    throw CLI::ValidationError("--algo admm conflicts with --k " +
                               std::to_string(a.k) + "; rounding is two-way");
  if (!a.trace_path.empty() && a.algo != "admm")
    throw CLI::ValidationError("--trace conflicts with --algo svd; "
                               "only the splitting solver records residuals");

  fairsdp::Graph graph = fairsdp::load_edge_list(a.graph_path);
  fairsdp::SensitiveAttributes sens = fairsdp::load_sensitive(a.sens_path);
  fairsdp::SolverConfig config = solver_config_for(a, sens);
  fairsdp::PenalizedMatrix penalized =
      fairsdp::build_penalized(graph, sens, config);

  std::optional<fairsdp::ClusterAssignment> assignment;
  if (a.algo == "svd") {
    if (a.k == 2) {
      assignment = fairsdp::fair_spectral_binary(penalized, config.ordering);
    } else if (config.strategy == fairsdp::MultiKStrategy::kRecursiveBisection) {
      assignment = fairsdp::recursive_bisection(penalized, config);
    } else {
      assignment = fairsdp::fair_spectral_k(penalized, config);
    }
  } else {
    fairsdp::AdmmConfig admm;
    admm.rho = a.rho;
    admm.beta = a.beta;
    admm.max_iter = a.max_iter;
    admm.tol = a.tol;
    admm.solver = config;
    fairsdp::AdmmResult result = fairsdp::admm_solve_penalized(penalized, admm);
    if (!result.converged)
      std::cerr << "warning: residuals above " << a.tol << " after "
                << result.state.iteration << " iterations\n";
    fairsdp::RoundingResult rounded = fairsdp::round_assignment(result.state);
    if (rounded.low_confidence)
      std::cerr << "warning: top two eigenvalues nearly tied; "
                   "the rounded direction is ambiguous\n";
    if (!a.trace_path.empty()) {
      std::ostringstream trace;
      trace << "iteration,split_residual,diag_residual\n";
      for (const auto& point : result.trace)
        trace << point.iteration << "," << fmt_double(point.split_residual)
              << "," << fmt_double(point.diag_residual) << "\n";
      write_text_file(a.trace_path, trace.str());
    }
    assignment = rounded.assignment;
  }

  fairsdp::save_labels(assignment->labels(), a.out_path);
  if (assignment->is_degenerate())
    std::cerr << "warning: degenerate assignment (all nodes in one cluster)\n";
  if (!quiet && a.k == 2)
    std::cout << "objective " << fmt_double(
                     fairsdp::objective_value(penalized, *assignment))
              << "\n";
  return 0;
}

struct EvalArgs {
  std::string pred_path;
  std::string truth_path;
  std::string sens_path;
  std::string graph_path;
  double lambda = 0.0;
  double mu = 1.0;
  std::string out_path;
};

int run_eval(const EvalArgs& a) {
  std::vector<int> pred = fairsdp::load_labels(a.pred_path);
  fairsdp::SensitiveAttributes sens = fairsdp::load_sensitive(a.sens_path);
  int k = 1;
  for (int label : pred) k = std::max(k, label + 1);
  fairsdp::ClusterAssignment assignment(pred, k);

  std::optional<std::vector<int>> truth;
  if (!a.truth_path.empty()) truth = fairsdp::load_labels(a.truth_path);

  std::optional<fairsdp::PenalizedMatrix> penalized;
  if (!a.graph_path.empty() && k == 2) {
    fairsdp::Graph graph = fairsdp::load_edge_list(a.graph_path);
    fairsdp::SolverConfig config;
    config.lambda_weights.assign(sens.is_binary() ? 1 : sens.group_count(),
                                 a.lambda);
    config.mu = a.mu;
    penalized = fairsdp::build_penalized(graph, sens, config);
  }

  fairsdp::ScoreReport report = fairsdp::score_report(
      assignment, truth ? &*truth : nullptr, sens,
      penalized ? &*penalized : nullptr);

  std::ostringstream csv;
  csv << "temporal_ami,temporal_ari,temporal_v,"
         "specificity_ami,specificity_ari,specificity_v,balance,objective\n";
  if (report.temporal)
    csv << fmt_double(report.temporal->ami) << ","
        << fmt_double(report.temporal->ari) << ","
        << fmt_double(report.temporal->v_measure) << ",";
  else
    csv << ",,,";
  csv << fmt_double(report.specificity.ami) << ","
      << fmt_double(report.specificity.ari) << ","
      << fmt_double(report.specificity.v_measure) << ","
      << fmt_double(report.balance) << ",";
  if (report.objective) csv << fmt_double(*report.objective);
  csv << "\n";

  if (a.out_path.empty())
    std::cout << csv.str();
  else
    write_text_file(a.out_path, csv.str());
  return 0;
}

struct SweepArgs {
  std::string graph_path;
  std::string sens_path;
  std::string truth_path;
  std::string out_path;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  int steps = 0;
  std::vector<double> mu_values = {1.0};
  std::vector<std::uint64_t> seeds = {0};
  std::string algo = "svd";
  int workers = 0;
  double rho = 1.0;
  double beta = 1.0;
  int max_iter = 1000;
  double tol = 1e-6;
};

int run_sweep_cmd(const SweepArgs& a, bool quiet) {
  if (a.lambda_min > a.lambda_max)
    throw CLI::ValidationError("--lambda-min " + fmt_double(a.lambda_min) +
                               " exceeds --lambda-max " +
                               fmt_double(a.lambda_max));
  if (a.steps > 1 && a.lambda_min == a.lambda_max)
    throw CLI::ValidationError("--steps " + std::to_string(a.steps) +
                               " conflicts with equal --lambda-min/--lambda-max");
  if (a.steps == 1 && a.lambda_min != a.lambda_max)
    throw CLI::ValidationError(
        "--steps 1 conflicts with distinct --lambda-min/--lambda-max");

  fairsdp::SweepSpec spec{fairsdp::load_edge_list(a.graph_path),
                          fairsdp::load_sensitive(a.sens_path)};
  if (!a.truth_path.empty()) spec.truth = fairsdp::load_labels(a.truth_path);
  spec.lambda_grid.resize(a.steps);
  for (int i = 0; i < a.steps; ++i)
    spec.lambda_grid[i] =
        a.steps == 1 ? a.lambda_min
                     : a.lambda_min + (a.lambda_max - a.lambda_min) * i /
                                          (a.steps - 1);
  spec.mu_values = a.mu_values;
  spec.seeds = a.seeds;
  spec.algo = a.algo == "admm" ? fairsdp::SweepAlgo::kAdmm
                               : fairsdp::SweepAlgo::kSpectral;
  spec.solver.lambda_weights.assign(
      spec.sens.is_binary() ? 1 : spec.sens.group_count(), 0.0);
  spec.admm.rho = a.rho;
  spec.admm.beta = a.beta;
  spec.admm.max_iter = a.max_iter;
  spec.admm.tol = a.tol;
  spec.workers = a.workers;

  if (!quiet)
    std::cerr << "sweep: " << spec.lambda_grid.size() << " lambdas x "
              << spec.mu_values.size() << " mus x " << spec.seeds.size()
              << " seeds\n";
  std::vector<fairsdp::SweepPoint> points = fairsdp::run_sweep(spec);
  for (const auto& point : points)
    if (!point.error.empty())
      std::cerr << "sweep: point mu=" << point.mu << " lambda=" << point.lambda
                << " seed=" << point.seed << " failed: " << point.error << "\n";
  fairsdp::SweepAucSummary aucs = fairsdp::sweep_auc_summary(points);
  fairsdp::save_sweep_csv(points, aucs, a.out_path);
  if (!quiet)
    std::cerr << "sweep: wrote " << a.out_path << " (auc_ami="
              << fmt_double(aucs.auc_ami) << ")\n";
  return 0;
}

struct PlotArgs {
  std::string in_path;
  std::string metric = "ami";
  std::string out_path;
};

int run_plot(const PlotArgs& a) {
  fairsdp::SweepCsv csv = fairsdp::load_sweep_csv(a.in_path);
  fairsdp::SweepMetric metric = fairsdp::SweepMetric::kAmi;
  if (a.metric == "ari") metric = fairsdp::SweepMetric::kAri;
  if (a.metric == "v") metric = fairsdp::SweepMetric::kVMeasure;
  write_text_file(a.out_path, fairsdp::render_sweep_svg(csv.points, metric));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fair two-cluster graph partitioning toolkit"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress progress and summary output");

  GenerateArgs gen;
  CLI::App* cmd_gen =
      app.add_subcommand("generate", "sample a synthetic instance to files");
  cmd_gen->add_option("--model", gen.model, "instance family")
      ->required()
      ->check(CLI::IsMember({"sbm", "weighted2"}));
  cmd_gen->add_option("--sizes", gen.sizes, "block sizes, comma separated")
      ->required()
      ->delimiter(',');
  cmd_gen->add_option("--p-in", gen.p_in, "within-block edge probability");
  cmd_gen->add_option("--p-out", gen.p_out, "between-block edge probability");
  cmd_gen->add_option("--w-in", gen.w_in, "within-block weight range lo,hi")
      ->delimiter(',')
      ->expected(0, 2);
  cmd_gen->add_option("--w-out", gen.w_out, "between-block weight range lo,hi")
      ->delimiter(',')
      ->expected(0, 2);
  cmd_gen->add_option("--sens-p", gen.sens_p,
                      "probability of the +1 attribute value");
  cmd_gen->add_option("--seed", gen.seed, "generator seed");
  cmd_gen->add_option("--out-prefix", gen.out_prefix,
                      "writes <prefix>.el, <prefix>.truth.csv, <prefix>.sens.csv")
      ->required();

  ClusterArgs clu;
  CLI::App* cmd_clu =
      app.add_subcommand("cluster", "partition a graph under the group penalty");
  cmd_clu->add_option("--graph", clu.graph_path, "edge-list file")->required();
  cmd_clu->add_option("--sens", clu.sens_path, "sensitive-attribute CSV")
      ->required();
  cmd_clu->add_option("--out", clu.out_path, "assignment CSV to write")
      ->required();
  cmd_clu->add_option("--algo", clu.algo, "solver")
      ->check(CLI::IsMember({"svd", "admm"}));
  cmd_clu->add_option("--lambda", clu.lambda, "group-penalty weight");
  cmd_clu->add_option("--mu", clu.mu, "balance-penalty weight");
  cmd_clu->add_option("--k", clu.k, "cluster count")
      ->check(CLI::Range(2, 1 << 20));
  cmd_clu->add_option("--strategy", clu.strategy, "k-way strategy")
      ->check(CLI::IsMember({"laplacian", "bisect"}));
  cmd_clu->add_option("--rho", clu.rho, "splitting penalty (admm)");
  cmd_clu->add_option("--beta", clu.beta, "nuclear-norm weight (admm)");
  cmd_clu->add_option("--max-iter", clu.max_iter, "iteration cap (admm)");
  cmd_clu->add_option("--tol", clu.tol, "residual tolerance (admm)");
  cmd_clu->add_option("--trace", clu.trace_path,
                      "write per-iteration residual CSV (admm)");

  EvalArgs eva;
  CLI::App* cmd_eva =
      app.add_subcommand("eval", "score an assignment against truth and groups");
  cmd_eva->add_option("--pred", eva.pred_path, "assignment CSV")->required();
  cmd_eva->add_option("--truth", eva.truth_path, "ground-truth CSV");
  cmd_eva->add_option("--sens", eva.sens_path, "sensitive-attribute CSV")
      ->required();
  cmd_eva->add_option("--graph", eva.graph_path,
                      "edge-list file, enables the objective column");
  cmd_eva->add_option("--lambda", eva.lambda, "group-penalty weight");
  cmd_eva->add_option("--mu", eva.mu, "balance-penalty weight");
  cmd_eva->add_option("--out", eva.out_path, "score CSV (default stdout)");

  SweepArgs swe;
  CLI::App* cmd_swe =
      app.add_subcommand("sweep", "evaluate a lambda grid and write a CSV");
  cmd_swe->add_option("--graph", swe.graph_path, "edge-list file")->required();
  cmd_swe->add_option("--sens", swe.sens_path, "sensitive-attribute CSV")
      ->required();
  cmd_swe->add_option("--truth", swe.truth_path, "ground-truth CSV");
  cmd_swe->add_option("--out", swe.out_path, "sweep CSV to write")->required();
  cmd_swe->add_option("--lambda-min", swe.lambda_min, "grid start")->required();
  cmd_swe->add_option("--lambda-max", swe.lambda_max, "grid end")->required();
  cmd_swe->add_option("--steps", swe.steps, "grid size")
      ->required()
      ->check(CLI::Range(1, 1 << 20));
  cmd_swe->add_option("--mu", swe.mu_values, "balance weights")->delimiter(',');
  cmd_swe->add_option("--seeds", swe.seeds, "tie-break seeds")->delimiter(',');
  cmd_swe->add_option("--algo", swe.algo, "solver")
      ->check(CLI::IsMember({"svd", "admm"}));
  cmd_swe->add_option("--workers", swe.workers,
                      "solver threads, 0 = hardware concurrency");
  cmd_swe->add_option("--rho", swe.rho, "splitting penalty (admm)");
  cmd_swe->add_option("--beta", swe.beta, "nuclear-norm weight (admm)");
  cmd_swe->add_option("--max-iter", swe.max_iter, "iteration cap (admm)");
  cmd_swe->add_option("--tol", swe.tol, "residual tolerance (admm)");

  PlotArgs plo;
  CLI::App* cmd_plo =
      app.add_subcommand("plot", "render a sweep CSV as a line chart SVG");
  cmd_plo->add_option("--in", plo.in_path, "sweep CSV")->required();
  cmd_plo->add_option("--metric", plo.metric, "score to plot")
      ->check(CLI::IsMember({"ami", "ari", "v"}));
  cmd_plo->add_option("--out", plo.out_path, "SVG file to write")->required();

  try {
    app.parse(argc, argv);
    if (cmd_gen->parsed()) return run_generate(gen, quiet);
    if (cmd_clu->parsed()) return run_cluster(clu, quiet);
    if (cmd_eva->parsed()) return run_eval(eva);
    if (cmd_swe->parsed()) return run_sweep_cmd(swe, quiet);
    return run_plot(plo);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const fairsdp::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const fairsdp::FileError& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return kExitFile;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
