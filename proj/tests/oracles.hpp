#pragma once

// Brute-force reference implementations used only by the tests. Each one
// follows a definition directly and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Pair = std::pair<int, int>;

// a / b in lowest terms; gmpxx leaves two-argument fractions uncanonicalized.
inline mpq_class frac(const mpz_class& a, const mpz_class& b) {
  mpq_class out(a, b);
  out.canonicalize();
  return out;
}

// Arcs of a block list: consecutive elements of each sorted block.
inline std::vector<Pair> arcs_of_blocks(std::vector<std::vector<int>> blocks) {
  std::vector<Pair> out;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    for (std::size_t k = 1; k < b.size(); ++k) out.emplace_back(b[k - 1], b[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Blocks by following arcs from every element that is not a right endpoint.
inline std::vector<std::vector<int>> chain_blocks(int n, const std::vector<Pair>& arcs) {
  std::map<int, int> next;
  std::set<int> has_left;
  for (auto [i, j] : arcs) {
    next[i] = j;
    has_left.insert(j);
  }
  std::vector<std::vector<int>> blocks;
  for (int s = 1; s <= n; ++s) {
    if (has_left.count(s)) continue;
    std::vector<int> b{s};
    for (auto it = next.find(s); it != next.end(); it = next.find(b.back())) b.push_back(it->second);
    blocks.push_back(b);
  }
  return blocks;
}

struct Stats {
  std::int64_t d = 0, dim = 0, crs = 0, nst = 0, adjacent = 0, disjoint = 0;
};

// Classifies every unordered pair of arcs by scanning ordered pairs.
inline Stats stats(const std::vector<Pair>& arcs) {
  Stats s;
  s.d = static_cast<std::int64_t>(arcs.size());
  for (auto [i, j] : arcs) s.dim += j - i;
  for (auto [i, j] : arcs) {
    for (auto [k, l] : arcs) {
      if (!(i < k)) continue;
      if (k < j && j < l) ++s.crs;
      else if (l < j) ++s.nst;
      else if (j == k) ++s.adjacent;
      else if (j < k) ++s.disjoint;
    }
  }
  return s;
}

inline bool contains(const std::vector<Pair>& arcs, Pair p) {
  return std::find(arcs.begin(), arcs.end(), p) != arcs.end();
}

// (i, j) is singular when some arc (k, j) has k < i or some arc (i, l) has l > j.
inline std::vector<Pair> singular(int n, const std::vector<Pair>& arcs) {
  std::vector<Pair> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bool sing = false;
      for (auto [a, b] : arcs) {
        if ((b == j && a < i) || (a == i && b > j)) sing = true;
      }
      if (sing) out.emplace_back(i, j);
    }
  }
  return out;
}

// Probability that x1 < x2 < y1 < y2 when x1, y1, x2, y2 are independent and
// uniform on the unit intervals [i-1, i], [j-1, j], [k-1, k], [l-1, l]. The
// chain must list the intervals in nondecreasing order; a run of r variables
// sharing an interval is in the required order with probability 1/r!.
inline mpq_class chain_probability(int i, int j, int k, int l) {
  const int chain[4] = {i, k, j, l};
  mpq_class p = 1;
  int run = 1;
  for (int t = 1; t < 4; ++t) {
    if (chain[t] < chain[t - 1]) return 0;
    if (chain[t] == chain[t - 1]) {
      ++run;
      p /= run;
    } else {
      run = 1;
    }
  }
  return p;
}

// I2 as the double sum over ordered cell pairs, each cell of mass 1/n.
inline mpq_class i2_bruteforce(int n, const std::vector<Pair>& arcs) {
  mpq_class total = 0;
  for (auto [i, j] : arcs) {
    for (auto [k, l] : arcs) total += chain_probability(i, j, k, l);
  }
  total /= mpq_class(n) * n;
  total.canonicalize();
  return total;
}

// Integral of (y - x) over the embedded measure, cell by cell.
inline mpq_class i1_bruteforce(int n, const std::vector<Pair>& arcs) {
  mpq_class total = 0;
  for (auto [i, j] : arcs) {
    const mpq_class cx = (mpq_class(i) - mpq_class(1, 2)) / n;
    const mpq_class cy = (mpq_class(j) - mpq_class(1, 2)) / n;
    total += (cy - cx) / n;
  }
  total.canonicalize();
  return total;
}

// The sweep on a dense 1-based (n+1) x (n+1) array of field values.
inline std::vector<Pair> sweep_dense(int n, std::vector<std::vector<int>> a) {
  for (int k = 1; k <= n - 1; ++k) {
    for (int i = 1; i <= k; ++i) {
      const int j = n - k + i;
      if (a[i][j] == 0) continue;
      for (int c = i + 1; c < j; ++c) a[i][c] = 0;
      for (int r = i + 1; r < j; ++r) a[r][j] = 0;
    }
  }
  std::vector<Pair> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (a[i][j] != 0) out.emplace_back(i, j);
    }
  }
  return out;
}

// Bell numbers from B_{m+1} = sum_k C(m, k) B_k.
inline std::vector<mpz_class> bell_numbers(int up_to) {
  std::vector<mpz_class> b{1};
  for (int m = 0; m < up_to; ++m) {
    mpz_class next = 0;
    mpz_class binom = 1;
    for (int k = 0; k <= m; ++k) {
      next += binom * b[static_cast<std::size_t>(k)];
      binom = binom * (m - k) / (k + 1);
    }
    b.push_back(next);
  }
  return b;
}

// Every set partition of [n] as a block list, by inserting n into each block
// of every partition of [n-1] or as a new singleton.
inline std::vector<std::vector<std::vector<int>>> all_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> cur{{}};
  for (int x = 1; x <= n; ++x) {
    std::vector<std::vector<std::vector<int>>> next;
    for (const auto& p : cur) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        auto q = p;
        q[b].push_back(x);
        next.push_back(q);
      }
      auto q = p;
      q.push_back({x});
      next.push_back(q);
    }
    cur = std::move(next);
  }
  return cur;
}

inline mpz_class ipow(long base, long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

}  // namespace oracle
