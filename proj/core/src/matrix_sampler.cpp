#include "superplancherel/matrix_sampler.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "superplancherel/error.hpp"
#include "superplancherel/rng.hpp"

namespace spl {

FieldParam::FieldParam(std::int64_t q) : q_(q) {
  if (q < 2) throw ValidationError("field size q must be at least 2, got " + std::to_string(q));
}

bool FieldParam::is_prime_power() const noexcept {
  std::int64_t m = q_;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    return m == 1;
  }
  return true;  // q itself is prime
}

UpperUniPattern::UpperUniPattern(int n) : n_(n) {
  if (n < 1) throw ValidationError("matrix size must be at least 1, got " + std::to_string(n));
  const auto sz = static_cast<std::size_t>(n);
  cells_.assign(sz * (sz - 1) / 2, 0);
}

UpperUniPattern UpperUniPattern::from_nonzeros(int n, const std::vector<Arc>& positions) {
  UpperUniPattern m(n);
  for (const Arc& a : positions) {
    if (a.left < 1 || a.right > n || a.left >= a.right) {
      throw ValidationError("position (" + std::to_string(a.left) + "," + std::to_string(a.right) +
                            ") is not strictly upper triangular in size " + std::to_string(n));
    }
    m.set(a.left, a.right, true);
  }
  return m;
}

std::vector<Arc> UpperUniPattern::nonzeros() const {
  std::vector<Arc> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (nonzero(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

std::size_t UpperUniPattern::nonzero_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

SweepResult canonicalize(const UpperUniPattern& m, DiagonalScan scan, std::uint64_t shuffle_seed) {
  SweepResult result{m, {}};
  UpperUniPattern& a = result.pattern;
  const int n = m.size();
  SplitMix64 rng(shuffle_seed);
  std::vector<int> rows;
  for (int k = 1; k <= n - 1; ++k) {
    rows.resize(static_cast<std::size_t>(k));
    std::iota(rows.begin(), rows.end(), 1);
    if (scan == DiagonalScan::bottom_up) {
      std::reverse(rows.begin(), rows.end());
    } else if (scan == DiagonalScan::shuffled) {
      for (std::size_t x = rows.size(); x > 1; --x) {
        std::swap(rows[x - 1], rows[rng.uniform_below(x)]);
      }
    }
    SweepStep& step = result.trace.steps.emplace_back();
    step.k = k;
    for (int i : rows) {
      const int j = n - k + i;
      if (!a.nonzero(i, j)) continue;
      step.pivots.push_back({i, j});
      for (int c = i + 1; c < j; ++c) {
        step.cleared += a.nonzero(i, c);
        a.set(i, c, false);
      }
      for (int r = i + 1; r < j; ++r) {
        step.cleared += a.nonzero(r, j);
        a.set(r, j, false);
      }
    }
    std::sort(step.pivots.begin(), step.pivots.end());
  }
  return result;
}

SetPartition partition_of(const UpperUniPattern& m) {
  return SetPartition::from_arcs(m.size(), canonicalize(m).pattern.nonzeros());
}

bool entry_nonzero(std::uint64_t seed, std::uint64_t entry, std::int64_t q) noexcept {
  SplitMix64 gen(derive_seed(seed, entry));
  return gen.uniform_below(static_cast<std::uint64_t>(q)) != 0;
}

UpperUniPattern sample_pattern(int n, FieldParam q, std::uint64_t seed) {
  UpperUniPattern m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      m.set(i, j, entry_nonzero(seed, m.index(i, j), q.q()));
    }
  }
  return m;
}

SetPartition sample_partition(int n, FieldParam q, std::uint64_t seed) {
  if (n < 1) throw ValidationError("matrix size must be at least 1, got " + std::to_string(n));
  const auto sz = static_cast<std::size_t>(n);
  std::vector<char> row_used(sz + 1, 0);
  std::vector<char> col_used(sz + 1, 0);
  std::vector<Arc> arcs;
  for (int k = 1; k <= n - 1; ++k) {
    for (int i = 1; i <= k; ++i) {
      const int j = n - k + i;
      if (row_used[i] || col_used[j]) continue;
      if (!entry_nonzero(seed, packed_upper_index(n, i, j), q.q())) continue;
      row_used[i] = 1;
      col_used[j] = 1;
      arcs.push_back({i, j});
    }
  }
  return SetPartition::from_arcs(n, std::move(arcs));
}

void enumerate_matrices(int n, FieldParam q,
                        const std::function<void(const UpperUniPattern&, std::uint64_t)>& fn,
                        std::uint64_t max_matrices) {
  UpperUniPattern m(n);
  const std::size_t free_entries = m.entry_count();
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(q.q()), free_entries);
  if (total > mpz_class(std::to_string(max_matrices))) {
    throw SizeLimitError("enumerating U_" + std::to_string(n) + "(F_" + std::to_string(q.q()) + ") means " +
                         total.get_str() + " matrices, above the limit of " + std::to_string(max_matrices));
  }
  std::vector<std::uint64_t> weight(free_entries + 1, 1);
  for (std::size_t c = 1; c <= free_entries; ++c) weight[c] = weight[c - 1] * static_cast<std::uint64_t>(q.q() - 1);

  const std::uint64_t patterns = std::uint64_t{1} << free_entries;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        m.set(i, j, (mask >> m.index(i, j)) & 1U);
      }
    }
    fn(m, weight[static_cast<std::size_t>(std::popcount(mask))]);
  }
}

}  // namespace spl
