#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superplancherel/measure.hpp"

namespace spl {

/// Seeded batch of superplancherel samples over several sizes n.
struct ExperimentPlan {
  std::int64_t q = 2;
  std::uint64_t seed = 0;
  int count = 1;                 // samples per n
  std::vector<int> n_values;     // strictly increasing
  int grid = 100;                // discrepancy lattice
  int heatmap_grid = 50;
  std::string output_dir;        // empty: compute only
  unsigned threads = 0;          // 0: worker_count() default

  /// Throws ValidationError on a malformed plan.
  void validate() const;

  /// Keys: q, seed, count, n, grid, heatmap_grid, output_dir, threads.
  static ExperimentPlan from_json(const nlohmann::json& j);
};

/// Derived seed of sample `index` at size n.
std::uint64_t sample_seed(std::uint64_t plan_seed, int n, std::uint64_t index);

struct SampleSummary {
  double dim_n2 = 0;
  double crs_n2 = 0;
  double darc_n = 0;
  double discrepancy = 0;
  double entropy = 0;
};

SampleSummary summarize(const SetPartition& p, int grid);

struct MeanSd {
  double mean = 0;
  double sd = 0;  // sample standard deviation; 0 for a single sample
};

struct ConvergenceRow {
  int n = 0;
  std::int64_t q = 0;
  int count = 0;
  MeanSd dim_n2;
  MeanSd crs_n2;
  MeanSd darc_n;
  MeanSd discrepancy;
  MeanSd entropy;
};

struct ExperimentResult {
  std::vector<ConvergenceRow> rows;
  std::vector<std::vector<double>> heatmaps;  // pooled mean, one per n
};

/// Number of workers: `requested` (hardware concurrency when 0), capped by
/// the SPL_THREADS environment variable when set.
unsigned worker_count(unsigned requested = 0);

/// Runs body(i) for i in [0, count) on `threads` workers. Results must be
/// written by index; scheduling never affects them.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Computes every row and pooled heatmap. Output depends only on the plan
/// (threads included or not).
ExperimentResult run_plan(const ExperimentPlan& plan);

/// convergence.csv columns: n, q, count, mean_dim_n2, sd_dim_n2, mean_crs_n2,
/// sd_crs_n2, mean_darc_n, mean_disc, sd_disc, mean_entropy.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

/// run_plan(), then writes convergence.csv and heatmap_<n>.csv under
/// plan.output_dir when it is set. Throws std::runtime_error naming the
/// path on I/O failure.
ExperimentResult run(const ExperimentPlan& plan);

/// Empirical law of `count` samples keyed by block string.
std::map<std::string, double> empirical_distribution(int n, FieldParam q, std::uint64_t seed, std::size_t count,
                                                     unsigned threads = 0);

/// Total variation distance between the exact table and an empirical law.
double total_variation(const DistributionTable& exact, const std::map<std::string, double>& empirical);

struct UniformComparison {
  int n = 0;
  int count = 0;
  double uniform_dim_n2 = 0;
  double spl_dim_n2 = 0;
  double uniform_crs_n2 = 0;
  double spl_crs_n2 = 0;
};

/// Mean dim/n^2 and crs/n^2 under the uniform law and the superplancherel
/// law (q) side by side.
UniformComparison compare_uniform(int n, int count, std::uint64_t seed, std::int64_t q = 2, unsigned threads = 0);

}  // namespace spl
