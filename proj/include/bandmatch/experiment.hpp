#pragma once

#include <iosfwd>

#include "bandmatch/cascade.hpp"
#include "bandmatch/generator.hpp"

namespace bandmatch {

/**
 * Line-oriented experiment description:
 *
 *   eps = 0.1, 0.05          # grid, comma separated
 *   solvers = greedy, exact
 *   oracle_cap = 20          # exact reference only below this edge count
 *   jobs = 1                 # concurrent rows
 *
 *   [instance]
 *   kind = graph             # graph | hypergraph | bipartite
 *   n = 8
 *   m = 14
 *   s = 3                    # hypergraph only
 *   dist = uniform(1,1e6)
 *   seed = 42
 *   count = 1                # replicas, seeds seed..seed+count-1
 *
 * '#' starts a comment, blank lines separate nothing.
 */
struct ExperimentConfig {
  std::vector<double> eps_grid;
  std::vector<std::string> solvers;
  int oracle_cap = 20;
  int jobs = 1;
  std::vector<InstanceSpec> instances;

  static ExperimentConfig parse(std::istream& in);
  static ExperimentConfig parse_file(const std::string& path);
};

/// One output row of run_experiment; `status` is "ok" or an error message.
struct ExperimentRecord {
  std::string instance;
  int n = 0, m = 0, s = 0;
  double eps = 0.0;
  std::string solver;
  double cascade_weight = 0.0;
  double solver_alone_weight = 0.0;
  double greedy_weight = 0.0;
  double opt_weight = -1.0;  // < 0 when the oracle was skipped
  double ratio = -1.0;       // cascade / opt when available
  std::int64_t transform_us = 0, partition_us = 0, solve_us = 0;
  std::string status = "ok";
};

extern const char* const kExperimentCsvHeader;

std::string to_csv_row(const ExperimentRecord& rec);

/**
 * Runs every (instance, eps, solver) combination and returns the full CSV.
 * Rows appear in config order regardless of `jobs`; a failing row is recorded
 * with its error message and the run continues. Timings come from a monotonic
 * clock in microseconds, after one untimed warm-up run.
 */
std::string run_experiment(const ExperimentConfig& config);

struct ScalingOptions {
  double eps = 0.1;
  std::string solver = "greedy";
  std::vector<int> sizes = {10000, 20000, 40000, 80000};
  int runs = 5;           // timed runs per size; the median is reported
  int avg_degree = 10;    // n = max(m / avg_degree, 64)
  std::uint64_t seed = 20240901;
};

struct ScalingRow {
  int m = 0;
  int n = 0;
  std::int64_t serial_solve_us = 0;    // median over runs
  std::int64_t parallel_solve_us = 0;  // median over runs
  double weight = 0.0;
  double factor_vs_previous = 0.0;  // parallel lane, 0 for the first row
};

/// Doubling benchmark over edge counts, serial lane vs OpenMP lane.
std::vector<ScalingRow> run_scaling_bench(const ScalingOptions& options);

std::string scaling_csv(const std::vector<ScalingRow>& rows);

}  // namespace bandmatch
