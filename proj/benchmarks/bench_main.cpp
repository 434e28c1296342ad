#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "superplancherel/embedding.hpp"
#include "superplancherel/matrix_sampler.hpp"
#include "superplancherel/measure.hpp"
#include "superplancherel/rng.hpp"
#include "superplancherel/set_partition.hpp"
#include "superplancherel/uniform_partition.hpp"

namespace {

void BM_SamplePartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(spl::sample_partition(n, spl::FieldParam(2), seed++));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SamplePartition)->RangeMultiplier(4)->Range(16, 4096)->Arg(5000)->Complexity();

void BM_Canonicalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const spl::UpperUniPattern m = spl::sample_pattern(n, spl::FieldParam(2), 7);
  for (auto _ : state) benchmark::DoNotOptimize(spl::canonicalize(m));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Canonicalize)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_FromArcs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<spl::Arc> arcs = spl::sample_partition(n, spl::FieldParam(2), 3).arcs();
  for (auto _ : state) benchmark::DoNotOptimize(spl::SetPartition::from_arcs(n, arcs).statistics().crs);
  state.SetComplexityN(n);
}
BENCHMARK(BM_FromArcs)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Discrepancy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const spl::GridMeasure m = spl::embed(spl::sample_partition(n, spl::FieldParam(2), 5));
  for (auto _ : state) benchmark::DoNotOptimize(spl::discrepancy(m, 100));
}
BENCHMARK(BM_Discrepancy)->RangeMultiplier(4)->Range(50, 3200);

void BM_ExactDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spl::exact_distribution(n, spl::FieldParam(3)));
}
BENCHMARK(BM_ExactDistribution)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_UniformPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const spl::UniformPartitionSampler sampler(n);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sampler(seed++));
}
BENCHMARK(BM_UniformPartition)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
