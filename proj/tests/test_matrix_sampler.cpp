#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "superplancherel/error.hpp"
#include "superplancherel/matrix_sampler.hpp"
#include "superplancherel/measure.hpp"
#include "superplancherel/rng.hpp"

using namespace spl;

namespace {

std::vector<oracle::Pair> pairs(const std::vector<Arc>& arcs) {
  std::vector<oracle::Pair> out;
  for (const Arc& a : arcs) out.emplace_back(a.left, a.right);
  return out;
}

// The worked example over F_7, rows 1..4 of the strictly upper part.
std::vector<std::vector<int>> example_matrix() {
  std::vector<std::vector<int>> a(6, std::vector<int>(6, 0));
  a[1][3] = 5;
  a[1][4] = 2;
  a[1][5] = 1;
  a[2][3] = 2;
  a[3][4] = 5;
  a[4][5] = 4;
  return a;
}

UpperUniPattern pattern_of(int n, const std::vector<std::vector<int>>& a) {
  UpperUniPattern m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) m.set(i, j, a[i][j] != 0);
  }
  return m;
}

}  // namespace

TEST_CASE("FieldParam") {
  CHECK_THROWS_AS(FieldParam(1), ValidationError);
  CHECK_THROWS_AS(FieldParam(-3), ValidationError);
  CHECK(FieldParam(2).is_prime_power());
  CHECK(FieldParam(9).is_prime_power());
  CHECK(FieldParam(16).is_prime_power());
  CHECK(FieldParam(13).is_prime_power());
  CHECK_FALSE(FieldParam(6).is_prime_power());
  CHECK_FALSE(FieldParam(12).is_prime_power());
}

TEST_CASE("packed index enumerates the strict upper triangle row by row") {
  for (int n = 1; n <= 9; ++n) {
    std::size_t expected = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) CHECK(packed_upper_index(n, i, j) == expected++);
    }
  }
}

TEST_CASE("sweep of the worked example") {
  const auto a = example_matrix();
  const SweepResult r = canonicalize(pattern_of(5, a));
  CHECK(r.pattern.nonzeros() == std::vector<Arc>{{1, 5}, {2, 3}, {3, 4}});
  CHECK(pairs(r.pattern.nonzeros()) == oracle::sweep_dense(5, a));
  CHECK(partition_of(pattern_of(5, a)).blocks() == std::vector<std::vector<int>>{{1, 5}, {2, 3, 4}});
  REQUIRE(r.trace.steps.size() == 4);
  for (int k = 1; k <= 4; ++k) CHECK(r.trace.steps[static_cast<std::size_t>(k - 1)].k == k);
  CHECK(r.trace.steps[0].pivots == std::vector<Arc>{{1, 5}});
  CHECK(r.trace.steps[0].cleared == 3);  // (1,3), (1,4), (4,5)
  CHECK(r.trace.steps[3].pivots == std::vector<Arc>{{2, 3}, {3, 4}});
}

TEST_CASE("sweep edge cases") {
  CHECK(canonicalize(UpperUniPattern(5)).pattern == UpperUniPattern(5));
  CHECK(partition_of(UpperUniPattern(5)) == SetPartition::singletons(5));
  CHECK(partition_of(UpperUniPattern(1)) == SetPartition::singletons(1));
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      const auto single = UpperUniPattern::from_nonzeros(5, {{i, j}});
      CHECK(canonicalize(single).pattern == single);
    }
  }
  const auto full = UpperUniPattern::from_nonzeros(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(partition_of(full).blocks() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK_THROWS_AS(UpperUniPattern::from_nonzeros(3, {{2, 2}}), ValidationError);
}

TEST_CASE("sweep agrees with the dense oracle, is idempotent and scan-order free") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_below(7));
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) a[i][j] = static_cast<int>(rng.uniform_below(3));
    }
    const UpperUniPattern m = pattern_of(n, a);
    const SweepResult r = canonicalize(m);
    CHECK(pairs(r.pattern.nonzeros()) == oracle::sweep_dense(n, a));
    CHECK(canonicalize(r.pattern).pattern == r.pattern);
    CHECK(canonicalize(m, DiagonalScan::bottom_up).pattern == r.pattern);
    CHECK(canonicalize(m, DiagonalScan::shuffled, rng()).pattern == r.pattern);
    std::vector<int> rows(static_cast<std::size_t>(n + 1), 0), cols(static_cast<std::size_t>(n + 1), 0);
    for (const Arc& x : r.pattern.nonzeros()) {
      CHECK(++rows[static_cast<std::size_t>(x.left)] == 1);
      CHECK(++cols[static_cast<std::size_t>(x.right)] == 1);
    }
  }
}

TEST_CASE("sample_pattern has Bernoulli((q-1)/q) entries") {
  CHECK(sample_pattern(1, FieldParam(2), 5).entry_count() == 0);
  int hits = 0;
  for (std::uint64_t s = 0; s < 100000; ++s) hits += sample_pattern(2, FieldParam(2), s).nonzero(1, 2);
  CHECK(std::abs(hits / 1e5 - 0.5) < 0.01);
  double total = 0;
  for (std::uint64_t s = 0; s < 10000; ++s) total += static_cast<double>(sample_pattern(5, FieldParam(3), s).nonzero_count());
  CHECK(std::abs(total / 1e4 - 20.0 / 3.0) < 0.2);
  CHECK(sample_pattern(30, FieldParam(5), 99) == sample_pattern(30, FieldParam(5), 99));
}

TEST_CASE("lazy sampler equals the sweep of the sampled pattern") {
  for (int n : {1, 2, 3, 5, 8, 13, 40}) {
    for (std::int64_t q : {2, 3, 7}) {
      for (std::uint64_t s = 0; s < 60; ++s) {
        const std::uint64_t seed = derive_seed(1234, s);
        CHECK(sample_partition(n, FieldParam(q), seed) == partition_of(sample_pattern(n, FieldParam(q), seed)));
      }
    }
  }
  CHECK_THROWS_AS(sample_partition(0, FieldParam(2), 1), ValidationError);
}

TEST_CASE("enumerate_matrices totals") {
  auto total = [](int n, std::int64_t q) {
    mpz_class sum = 0;
    std::size_t patterns = 0;
    enumerate_matrices(n, FieldParam(q), [&](const UpperUniPattern&, std::uint64_t w) {
      sum += mpz_class(std::to_string(w));
      ++patterns;
    });
    return std::make_pair(sum, patterns);
  };
  CHECK(total(2, 2).first == 2);
  CHECK(total(3, 2).first == 8);
  CHECK(total(4, 3).first == 729);
  CHECK(total(4, 3).second == 64);
  CHECK(total(1, 5).first == 1);
  CHECK_THROWS_AS(enumerate_matrices(6, FieldParam(3), [](const UpperUniPattern&, std::uint64_t) {}), SizeLimitError);
}

TEST_CASE("class sizes from literal field-value enumeration") {
  // Every matrix of U_3(F_3) with actual entries, classified by the dense sweep.
  std::map<std::vector<oracle::Pair>, int> tally;
  for (int x = 0; x < 27; ++x) {
    std::vector<std::vector<int>> a(4, std::vector<int>(4, 0));
    a[1][2] = x % 3;
    a[1][3] = (x / 3) % 3;
    a[2][3] = x / 9;
    ++tally[oracle::sweep_dense(3, a)];
  }
  for (const auto& [arcs, count] : tally) {
    std::vector<Arc> as;
    for (auto [i, j] : arcs) as.push_back({i, j});
    CHECK(j_size(SetPartition::from_arcs(3, as), FieldParam(3)) == count);
  }
  CHECK(tally.size() == 5);
}
