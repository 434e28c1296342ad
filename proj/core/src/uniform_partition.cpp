#include "superplancherel/uniform_partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "superplancherel/error.hpp"

namespace spl {

UniformPartitionSampler::UniformPartitionSampler(int n) : n_(n) {
  if (n < 1) throw ValidationError("partition size must be at least 1, got " + std::to_string(n));
  // log of m^n / m!, kept until it falls e^-60 below its maximum; the mass
  // left out is far below double resolution.
  std::vector<double> log_weight;
  double best = -INFINITY;
  for (int m = 1;; ++m) {
    const double w = n * std::log(static_cast<double>(m)) - std::lgamma(m + 1.0);
    log_weight.push_back(w);
    best = std::max(best, w);
    if (w < best - 60.0) break;
  }
  double total = 0;
  for (double w : log_weight) total += std::exp(w - best);
  double running = 0;
  for (double w : log_weight) {
    running += std::exp(w - best) / total;
    urn_cdf_.push_back(running);
  }
  urn_cdf_.back() = 1.0;
}

SetPartition UniformPartitionSampler::operator()(std::uint64_t seed) const {
  SplitMix64 rng(seed);
  const double u = rng.uniform01();
  const auto it = std::upper_bound(urn_cdf_.begin(), urn_cdf_.end(), u);
  const auto urns = static_cast<std::uint64_t>(it - urn_cdf_.begin()) + 1;
  // relabel urns by first appearance to get a restricted growth string
  std::vector<int> relabel(urns, -1);
  std::vector<int> labels(static_cast<std::size_t>(n_));
  int next_label = 0;
  for (auto& lab : labels) {
    const auto urn = rng.uniform_below(urns);
    if (relabel[urn] < 0) relabel[urn] = next_label++;
    lab = relabel[urn];
  }
  return SetPartition::from_restricted_growth(labels);
}

}  // namespace spl
