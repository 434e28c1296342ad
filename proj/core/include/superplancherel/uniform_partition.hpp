#pragma once

#include <cstdint>
#include <vector>

#include "superplancherel/rng.hpp"
#include "superplancherel/set_partition.hpp"

namespace spl {

/// Exact uniform sampler for set partitions of [n] by the urn method: draw
/// M with P(M = m) = m^n / (e m! B_n), drop n labelled balls uniformly into M
/// urns and keep the nonempty urns as blocks.
class UniformPartitionSampler {
 public:
  explicit UniformPartitionSampler(int n);

  int size() const noexcept { return n_; }
  SetPartition operator()(std::uint64_t seed) const;

 private:
  int n_;
  std::vector<double> urn_cdf_;  // P(M <= m), m = 1, 2, ...
};

}  // namespace spl
