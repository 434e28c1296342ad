#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "superplancherel/set_partition.hpp"

namespace spl {

/// Field size q >= 2. The supercharacter theory is only stated for prime
/// powers; other q are accepted (the sampler and the weight formula make
/// sense for any q) and is_prime_power() lets callers warn.
class FieldParam {
 public:
  explicit FieldParam(std::int64_t q);

  std::int64_t q() const noexcept { return q_; }
  bool is_prime_power() const noexcept;

 private:
  std::int64_t q_;
};

/// Row-major packed position of (i, j), 1 <= i < j <= n, among the
/// n(n-1)/2 strictly upper entries.
constexpr std::size_t packed_upper_index(int n, int i, int j) noexcept {
  const auto r = static_cast<std::size_t>(i - 1);
  return r * static_cast<std::size_t>(n) - r * (r + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

/// Zero/nonzero pattern of a strictly upper triangular n x n array. The
/// diagonal of the underlying unitriangular matrix is implicitly 1.
class UpperUniPattern {
 public:
  explicit UpperUniPattern(int n);

  static UpperUniPattern from_nonzeros(int n, const std::vector<Arc>& positions);

  int size() const noexcept { return n_; }
  std::size_t entry_count() const noexcept { return cells_.size(); }

  bool nonzero(int i, int j) const { return cells_[index(i, j)] != 0; }
  void set(int i, int j, bool value) { cells_[index(i, j)] = value ? 1 : 0; }

  std::size_t index(int i, int j) const { return packed_upper_index(n_, i, j); }

  std::vector<Arc> nonzeros() const;
  std::size_t nonzero_count() const;

  friend bool operator==(const UpperUniPattern&, const UpperUniPattern&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> cells_;
};

/// One pass of the sweep over the diagonal {(i, i + n - k)}.
struct SweepStep {
  int k = 0;
  std::vector<Arc> pivots;
  std::size_t cleared = 0;  // nonzero entries set to zero in this pass
};

struct SweepTrace {
  std::vector<SweepStep> steps;
};

struct SweepResult {
  UpperUniPattern pattern;
  SweepTrace trace;
};

enum class DiagonalScan { top_down, bottom_up, shuffled };

/// The diagonal sweep. For k = 1..n-1 the k-th diagonal from the upper-right
/// corner is scanned; every nonzero entry found there becomes a pivot and
/// the entries strictly left of it in its row and strictly below it in its
/// column are zeroed. The surviving nonzeros are at most one per row and one
/// per column and form the arc set of a set partition.
///
/// Entries of one diagonal share no row or column, so `scan` does not change
/// the result; it exists so that this can be checked.
SweepResult canonicalize(const UpperUniPattern& m, DiagonalScan scan = DiagonalScan::top_down,
                         std::uint64_t shuffle_seed = 0);

/// The partition whose arc set is the canonical form of m.
SetPartition partition_of(const UpperUniPattern& m);

/// Whether entry `entry` (packed index) of the matrix drawn under `seed` is
/// nonzero. The entry is a uniform element of Z/q, so it is nonzero with
/// probability (q - 1)/q, independently of every other entry.
bool entry_nonzero(std::uint64_t seed, std::uint64_t entry, std::int64_t q) noexcept;

/// Indicator pattern of a uniform random element of U_n(F_q).
UpperUniPattern sample_pattern(int n, FieldParam q, std::uint64_t seed);

/// partition_of(sample_pattern(n, q, seed)) without materializing the
/// pattern: an entry is read only when neither its row nor its column holds
/// a pivot yet, which is exactly when the sweep would still see it.
SetPartition sample_partition(int n, FieldParam q, std::uint64_t seed);

/// Calls fn(pattern, multiplicity) for every indicator pattern of U_n(F_q);
/// multiplicity (q - 1)^{#nonzero} counts the matrices sharing the pattern.
/// Refuses with SizeLimitError when q^{n(n-1)/2} exceeds max_matrices.
void enumerate_matrices(int n, FieldParam q,
                        const std::function<void(const UpperUniPattern&, std::uint64_t)>& fn,
                        std::uint64_t max_matrices = 10'000'000);

}  // namespace spl
