#include "superplancherel/set_partition.hpp"

#include <algorithm>
#include <string>

#include "superplancherel/error.hpp"

namespace spl {
namespace {

void require_size(int n) {
  if (n < 1) throw ValidationError("partition size must be at least 1, got " + std::to_string(n));
}

ArcStatistics compute_statistics(const std::vector<Arc>& arcs) {
  ArcStatistics s;
  s.d = static_cast<std::int64_t>(arcs.size());
  for (const Arc& a : arcs) s.dim += a.right - a.left;
  // arcs are sorted by left endpoint, so a.left < b.left for a before b
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    const Arc& a = arcs[x];
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      const Arc& b = arcs[y];
      if (b.left > a.right) break;  // every later arc is disjoint from a too
      if (b.left == a.right) {
        ++s.adjacent;
      } else if (b.right < a.right) {
        ++s.nst;
      } else {
        ++s.crs;
      }
    }
  }
  s.sing_count = 2 * (s.dim - s.d) - s.crs;
  return s;
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<int> next)
    : n_(n), next_(std::move(next)), prev_(static_cast<std::size_t>(n) + 1, 0) {
  for (int i = 1; i <= n_; ++i) {
    if (const int j = next_[i]; j != 0) {
      prev_[j] = i;
      arcs_.push_back({i, j});
    }
  }
  for (int i = 1; i <= n_; ++i) {
    if (prev_[i] != 0) continue;
    auto& block = blocks_.emplace_back();
    for (int e = i; e != 0; e = next_[e]) block.push_back(e);
  }
  stats_ = compute_statistics(arcs_);
}

SetPartition SetPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  require_size(n);
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ValidationError("block " + std::to_string(b) + " is empty");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) {
        throw ValidationError("element " + std::to_string(e) + " is outside 1.." + std::to_string(n));
      }
      if (owner[e] != -1) {
        throw ValidationError("element " + std::to_string(e) + " appears in more than one place");
      }
      owner[e] = static_cast<int>(b);
    }
  }
  for (int e = 1; e <= n; ++e) {
    if (owner[e] == -1) throw ValidationError("element " + std::to_string(e) + " is not covered");
  }
  std::vector<int> next(static_cast<std::size_t>(n) + 1, 0);
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
    for (std::size_t k = 0; k + 1 < block.size(); ++k) next[block[k]] = block[k + 1];
  }
  return SetPartition(n, std::move(next));
}

SetPartition SetPartition::from_arcs(int n, std::vector<Arc> arcs) {
  require_size(n);
  std::vector<int> next(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> has_left(static_cast<std::size_t>(n) + 1, 0);
  for (const Arc& a : arcs) {
    const std::string where = "(" + std::to_string(a.left) + "," + std::to_string(a.right) + ")";
    if (a.left < 1 || a.right > n) throw ValidationError("arc " + where + " is outside 1.." + std::to_string(n));
    if (a.left >= a.right) throw ValidationError("arc " + where + " must satisfy left < right");
    if (next[a.left] != 0) {
      throw ValidationError("element " + std::to_string(a.left) + " is the left endpoint of two arcs");
    }
    if (has_left[a.right]) {
      throw ValidationError("element " + std::to_string(a.right) + " is the right endpoint of two arcs");
    }
    next[a.left] = a.right;
    has_left[a.right] = 1;
  }
  return SetPartition(n, std::move(next));
}

SetPartition SetPartition::singletons(int n) {
  require_size(n);
  return SetPartition(n, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
}

SetPartition SetPartition::from_restricted_growth(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  require_size(n);
  std::vector<int> last(static_cast<std::size_t>(n), 0);  // last element seen per label
  std::vector<int> next(static_cast<std::size_t>(n) + 1, 0);
  int max_label = -1;
  for (int i = 1; i <= n; ++i) {
    const int lab = labels[static_cast<std::size_t>(i - 1)];
    if (lab < 0 || lab > max_label + 1) {
      throw ValidationError("label " + std::to_string(lab) + " at position " + std::to_string(i) +
                            " breaks restricted growth");
    }
    max_label = std::max(max_label, lab);
    if (last[lab] != 0) next[last[lab]] = i;
    last[lab] = i;
  }
  return SetPartition(n, std::move(next));
}

std::string SetPartition::block_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
      if (k) out += '.';
      out += std::to_string(blocks_[b][k]);
    }
  }
  return out;
}

std::vector<int> SetPartition::restricted_growth() const {
  std::vector<int> labels(static_cast<std::size_t>(n_));
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int e : blocks_[b]) labels[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
  }
  return labels;
}

bool is_regular(const SetPartition& p, Arc pair) {
  const int i = pair.left;
  const int j = pair.right;
  if (i < 1 || j > p.size() || i >= j) {
    throw ValidationError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") is not an upper pair");
  }
  const int k = p.predecessor(j);
  if (k != 0 && k < i) return false;
  const int l = p.successor(i);
  if (l != 0 && l > j) return false;
  return true;
}

std::vector<Arc> regular_pairs(const SetPartition& p) {
  std::vector<Arc> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (is_regular(p, {i, j})) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Arc> singular_pairs(const SetPartition& p) {
  std::vector<Arc> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (!is_regular(p, {i, j})) out.push_back({i, j});
    }
  }
  return out;
}

std::int64_t nesting_count_over(const SetPartition& p, Arc inner) {
  std::int64_t count = 0;
  for (const Arc& a : p.arcs()) {
    if (a.left >= inner.left) break;
    if (a.right > inner.right) ++count;
  }
  return count;
}

std::int64_t nst_weight(const SetPartition& p, const SetPartition& s) {
  if (s.size() > p.size()) {
    throw ValidationError("nst_weight needs s.size() <= p.size(), got " + std::to_string(s.size()) + " > " +
                          std::to_string(p.size()));
  }
  std::int64_t total = 0;
  for (const Arc& a : s.arcs()) total += nesting_count_over(p, a);
  return total;
}

std::uint64_t bell_number(int n) {
  if (n < 0 || n > 25) throw SizeLimitError("bell_number supports 0 <= n <= 25, got " + std::to_string(n));
  if (n == 0) return 1;
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r < n; ++r) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

PartitionEnumerator::PartitionEnumerator(int n) {
  require_size(n);
  labels_.assign(static_cast<std::size_t>(n), 0);
  prefix_max_.assign(static_cast<std::size_t>(n), 0);
}

bool PartitionEnumerator::next() {
  const int n = static_cast<int>(labels_.size());
  // prefix_max_[i] is the maximum of labels_[0..i-1] (0 for i == 0)
  for (int i = n - 1; i >= 1; --i) {
    if (labels_[i] <= prefix_max_[i]) {
      ++labels_[i];
      for (int k = i + 1; k < n; ++k) {
        labels_[k] = 0;
        prefix_max_[k] = std::max(prefix_max_[k - 1], labels_[k - 1]);
      }
      return true;
    }
  }
  return false;
}

}  // namespace spl
