#include "superplancherel/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "superplancherel/embedding.hpp"
#include "superplancherel/error.hpp"
#include "superplancherel/io.hpp"
#include "superplancherel/matrix_sampler.hpp"
#include "superplancherel/rng.hpp"
#include "superplancherel/uniform_partition.hpp"

namespace spl {
namespace {

MeanSd mean_sd(const std::vector<double>& xs) {
  MeanSd out;
  if (xs.empty()) return out;
  double sum = 0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double sq = 0;
    for (double x : xs) sq += (x - out.mean) * (x - out.mean);
    out.sd = std::sqrt(sq / static_cast<double>(xs.size() - 1));
  }
  return out;
}

}  // namespace

void ExperimentPlan::validate() const {
  (void)FieldParam{q};
  if (count < 1) throw ValidationError("sample count must be at least 1, got " + std::to_string(count));
  if (n_values.empty()) throw ValidationError("plan lists no sizes n");
  for (std::size_t k = 0; k < n_values.size(); ++k) {
    if (n_values[k] < 1) throw ValidationError("size n must be at least 1, got " + std::to_string(n_values[k]));
    if (k > 0 && n_values[k] <= n_values[k - 1]) throw ValidationError("sizes n must be strictly increasing");
  }
  if (grid < 2) throw ValidationError("discrepancy grid must be at least 2, got " + std::to_string(grid));
  if (heatmap_grid < 1) throw ValidationError("heatmap grid must be at least 1");
}

ExperimentPlan ExperimentPlan::from_json(const nlohmann::json& j) {
  ExperimentPlan plan;
  try {
    plan.q = j.value("q", plan.q);
    plan.seed = j.value("seed", plan.seed);
    plan.count = j.value("count", plan.count);
    plan.n_values = j.at("n").get<std::vector<int>>();
    plan.grid = j.value("grid", plan.grid);
    plan.heatmap_grid = j.value("heatmap_grid", plan.heatmap_grid);
    plan.output_dir = j.value("output_dir", plan.output_dir);
    plan.threads = j.value("threads", plan.threads);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed plan JSON: ") + e.what());
  }
  plan.validate();
  return plan;
}

std::uint64_t sample_seed(std::uint64_t plan_seed, int n, std::uint64_t index) {
  return derive_seed(derive_seed(plan_seed, static_cast<std::uint64_t>(n)), index);
}

SampleSummary summarize(const SetPartition& p, int grid) {
  const GridMeasure m = embed(p);
  const ArcStatistics& s = p.statistics();
  const double n = p.size();
  return {static_cast<double>(s.dim) / (n * n), static_cast<double>(s.crs) / (n * n), static_cast<double>(s.d) / n,
          discrepancy(m, grid), entropy(m).get_d()};
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPL_THREADS"); env != nullptr && *env != '\0') {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

ExperimentResult run_plan(const ExperimentPlan& plan) {
  plan.validate();
  const FieldParam q(plan.q);
  const unsigned threads = worker_count(plan.threads);
  const auto count = static_cast<std::size_t>(plan.count);
  const auto cells = static_cast<std::size_t>(plan.heatmap_grid) * static_cast<std::size_t>(plan.heatmap_grid);
  ExperimentResult result;
  for (int n : plan.n_values) {
    std::vector<SampleSummary> summaries(count);
    std::vector<double> pooled(cells, 0.0);
    // Heatmaps are folded in index order a chunk at a time, which keeps the
    // floating-point sum independent of the worker count.
    constexpr std::size_t kChunk = 256;
    std::vector<std::vector<double>> maps(std::min(count, kChunk));
    for (std::size_t start = 0; start < count; start += kChunk) {
      const std::size_t len = std::min(kChunk, count - start);
      parallel_for(len, threads, [&](std::size_t k) {
        const std::size_t i = start + k;
        const SetPartition p = sample_partition(n, q, sample_seed(plan.seed, n, i));
        summaries[i] = summarize(p, plan.grid);
        maps[k] = heatmap(embed(p), plan.heatmap_grid);
      });
      for (std::size_t k = 0; k < len; ++k) {
        for (std::size_t c = 0; c < cells; ++c) pooled[c] += maps[k][c];
      }
    }
    std::vector<double> dim, crs, darc, disc, ent;
    for (const SampleSummary& s : summaries) {
      dim.push_back(s.dim_n2);
      crs.push_back(s.crs_n2);
      darc.push_back(s.darc_n);
      disc.push_back(s.discrepancy);
      ent.push_back(s.entropy);
    }
    for (double& v : pooled) v /= static_cast<double>(count);
    result.rows.push_back({n, plan.q, plan.count, mean_sd(dim), mean_sd(crs), mean_sd(darc), mean_sd(disc),
                           mean_sd(ent)});
    result.heatmaps.push_back(std::move(pooled));
  }
  return result;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  using io::format_double;
  out << "n,q,count,mean_dim_n2,sd_dim_n2,mean_crs_n2,sd_crs_n2,mean_darc_n,mean_disc,sd_disc,mean_entropy\n";
  for (const ConvergenceRow& r : rows) {
    out << r.n << ',' << r.q << ',' << r.count << ',' << format_double(r.dim_n2.mean) << ','
        << format_double(r.dim_n2.sd) << ',' << format_double(r.crs_n2.mean) << ',' << format_double(r.crs_n2.sd)
        << ',' << format_double(r.darc_n.mean) << ',' << format_double(r.discrepancy.mean) << ','
        << format_double(r.discrepancy.sd) << ',' << format_double(r.entropy.mean) << '\n';
  }
}

ExperimentResult run(const ExperimentPlan& plan) {
  ExperimentResult result = run_plan(plan);
  if (plan.output_dir.empty()) return result;

  namespace fs = std::filesystem;
  const fs::path dir(plan.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  auto open = [](const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
  };
  {
    const fs::path path = dir / "convergence.csv";
    std::ofstream out = open(path);
    write_convergence_csv(out, result.rows);
    if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
  }
  for (std::size_t k = 0; k < result.rows.size(); ++k) {
    const fs::path path = dir / ("heatmap_" + std::to_string(result.rows[k].n) + ".csv");
    std::ofstream out = open(path);
    io::write_heatmap_csv(out, result.rows[k].n, plan.q, plan.seed, plan.heatmap_grid, result.heatmaps[k]);
    if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
  }
  return result;
}

std::map<std::string, double> empirical_distribution(int n, FieldParam q, std::uint64_t seed, std::size_t count,
                                                     unsigned threads) {
  std::vector<std::string> keys(count);
  parallel_for(count, worker_count(threads),
               [&](std::size_t i) { keys[i] = sample_partition(n, q, derive_seed(seed, i)).block_string(); });
  std::map<std::string, double> freq;
  for (const auto& k : keys) freq[k] += 1.0;
  for (auto& [k, v] : freq) v /= static_cast<double>(count);
  return freq;
}

double total_variation(const DistributionTable& exact, const std::map<std::string, double>& empirical) {
  const mpq_class order(unitriangular_order(exact.n, exact.q));
  double sum = 0;
  double covered = 0;  // empirical mass on partitions of the table
  for (const DistributionRow& row : exact.rows) {
    const double p = mpq_class(mpq_class(row.count) / order).get_d();
    const auto it = empirical.find(row.partition.block_string());
    const double e = it == empirical.end() ? 0.0 : it->second;
    covered += e;
    sum += std::abs(p - e);
  }
  double all = 0;
  for (const auto& [key, e] : empirical) all += e;
  return (sum + (all - covered)) / 2.0;
}

UniformComparison compare_uniform(int n, int count, std::uint64_t seed, std::int64_t q, unsigned threads) {
  if (n < 1 || n > 2000) throw ValidationError("compare_uniform supports 1 <= n <= 2000, got " + std::to_string(n));
  if (count < 1) throw ValidationError("sample count must be at least 1");
  const FieldParam field(q);
  const UniformPartitionSampler uniform(n);
  const auto c = static_cast<std::size_t>(count);
  std::vector<double> u_dim(c), u_crs(c), s_dim(c), s_crs(c);
  const double n2 = static_cast<double>(n) * n;
  parallel_for(c, worker_count(threads), [&](std::size_t i) {
    const SetPartition u = uniform(derive_seed(derive_seed(seed, 1), i));
    const SetPartition s = sample_partition(n, field, derive_seed(derive_seed(seed, 2), i));
    u_dim[i] = static_cast<double>(u.statistics().dim) / n2;
    u_crs[i] = static_cast<double>(u.statistics().crs) / n2;
    s_dim[i] = static_cast<double>(s.statistics().dim) / n2;
    s_crs[i] = static_cast<double>(s.statistics().crs) / n2;
  });
  return {n, count, mean_sd(u_dim).mean, mean_sd(s_dim).mean, mean_sd(u_crs).mean, mean_sd(s_crs).mean};
}

}  // namespace spl
