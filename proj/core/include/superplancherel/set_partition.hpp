#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spl {

/// A pair (left, right) of 1-based indices with left < right. Used both for
/// arcs of a partition and for arbitrary strictly-upper matrix positions.
struct Arc {
  int left = 0;
  int right = 0;

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

/// Arc-pair statistics of a set partition. Pair counts are over unordered
/// pairs of distinct arcs.
struct ArcStatistics {
  std::int64_t d = 0;          // number of arcs
  std::int64_t dim = 0;        // sum of right - left over arcs
  std::int64_t crs = 0;        // pairs i < k < j < l
  std::int64_t nst = 0;        // pairs i < k < l < j
  std::int64_t adjacent = 0;   // pairs (i,j),(j,l)
  std::int64_t sing_count = 0; // |Sing|, equal to 2(dim - d) - crs

  friend bool operator==(const ArcStatistics&, const ArcStatistics&) = default;
};

/// An immutable set partition of {1..n}, held as its canonical block list and
/// its arc set. Statistics are computed once at construction.
class SetPartition {
 public:
  /// Validates that `blocks` partition {1..n}; reorders into canonical form.
  static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);

  /// Rebuilds the partition whose arc set is `arcs` by chaining arcs.
  static SetPartition from_arcs(int n, std::vector<Arc> arcs);

  static SetPartition singletons(int n);

  /// Restricted growth string with 0-based labels: labels[0] == 0 and each
  /// label is at most one more than the maximum of its predecessors.
  static SetPartition from_restricted_growth(std::span<const int> labels);

  int size() const noexcept { return n_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

  /// Arcs sorted by left endpoint.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  /// Right partner of i in its block, or 0 when i is the block maximum.
  int successor(int i) const { return next_[static_cast<std::size_t>(i)]; }
  /// Left partner of j in its block, or 0 when j is the block minimum.
  int predecessor(int j) const { return prev_[static_cast<std::size_t>(j)]; }

  bool has_arc(Arc a) const {
    return a.left >= 1 && a.left <= n_ && successor(a.left) == a.right;
  }

  const ArcStatistics& statistics() const noexcept { return stats_; }

  /// "1.5.7|2|3.4.9|6.8"
  std::string block_string() const;

  /// 0-based restricted growth labels of elements 1..n.
  std::vector<int> restricted_growth() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  SetPartition(int n, std::vector<int> next);

  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<Arc> arcs_;
  std::vector<int> next_;
  std::vector<int> prev_;
  ArcStatistics stats_;
};

inline const ArcStatistics& statistics(const SetPartition& p) { return p.statistics(); }

/// True when no arc (k, j) with k < i and no arc (i, l) with l > j exists.
bool is_regular(const SetPartition& p, Arc pair);

/// All regular pairs (i, j), 1 <= i < j <= n, in lexicographic order.
std::vector<Arc> regular_pairs(const SetPartition& p);

/// Complement of regular_pairs() among all pairs i < j.
std::vector<Arc> singular_pairs(const SetPartition& p);

/// Number of arcs (i, j) of p with i < k < l < j.
std::int64_t nesting_count_over(const SetPartition& p, Arc inner);

/// Sum over arcs (k, l) of s of nesting_count_over(p, (k, l)). Requires
/// s.size() <= p.size().
std::int64_t nst_weight(const SetPartition& p, const SetPartition& s);

/// Bell numbers by the Bell triangle; exact up to n = 25.
std::uint64_t bell_number(int n);

/// Walks every set partition of {1..n} once, in lexicographic order of
/// restricted growth strings. Single consumer.
///
///   PartitionEnumerator e(4);
///   do { use(e.current()); } while (e.next());
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n);

  const std::vector<int>& labels() const noexcept { return labels_; }
  SetPartition current() const { return SetPartition::from_restricted_growth(labels_); }

  /// Advances to the next string; false once the last one has been visited.
  bool next();

 private:
  std::vector<int> labels_;
  std::vector<int> prefix_max_;
};

template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
  PartitionEnumerator e(n);
  do {
    fn(e.current());
  } while (e.next());
}

}  // namespace spl
