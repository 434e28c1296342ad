#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "superplancherel/error.hpp"
#include "superplancherel/matrix_sampler.hpp"
#include "superplancherel/measure.hpp"
#include "superplancherel/sct.hpp"

namespace spl {
namespace {

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// Strictly upper entries of an element of U_n(F_p), dense n x n with
// 0-based indices; element index is sum of entry(t) p^t over packed order.
class UpperCodec {
 public:
  UpperCodec(int n, int p) : n_(n), p_(p) {
    entries_ = n * (n - 1) / 2;
    order_ = 1;
    for (int t = 0; t < entries_; ++t) order_ *= p;
  }

  int order() const { return order_; }

  std::vector<int> decode(int index) const {
    std::vector<int> m(static_cast<std::size_t>(n_ * n_), 0);
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        m[(i - 1) * n_ + (j - 1)] = digit(index, packed_upper_index(n_, i, j));
      }
    }
    return m;
  }

  int encode(const std::vector<int>& m) const {
    std::vector<int> digits(static_cast<std::size_t>(entries_));
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        digits[packed_upper_index(n_, i, j)] = ((m[(i - 1) * n_ + (j - 1)] % p_) + p_) % p_;
      }
    }
    int index = 0;
    int place = 1;
    for (int t = 0; t < entries_; ++t) {
      index += digits[static_cast<std::size_t>(t)] * place;
      place *= p_;
    }
    return index;
  }

 private:
  int digit(int index, std::size_t position) const {
    for (std::size_t t = 0; t < position; ++t) index /= p_;
    return index % p_;
  }

  int n_;
  int p_;
  int entries_;
  int order_;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

UnitriangularTheory matrix_theory(int n, int p) {
  const UpperCodec codec(n, p);
  const int order = codec.order();
  const auto sz = static_cast<std::size_t>(n);

  std::vector<std::vector<int>> mul(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  std::vector<std::vector<int>> decoded;
  for (int a = 0; a < order; ++a) decoded.push_back(codec.decode(a));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      // (1 + X)(1 + Y) = 1 + X + Y + XY
      const auto& x = decoded[a];
      const auto& y = decoded[b];
      std::vector<int> z(sz * sz, 0);
      for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = i + 1; j < sz; ++j) {
          int v = x[i * sz + j] + y[i * sz + j];
          for (std::size_t k = i + 1; k < j; ++k) v += x[i * sz + k] * y[k * sz + j];
          z[i * sz + j] = v % p;
        }
      }
      mul[a][b] = codec.encode(z);
    }
  }
  FiniteGroup group(std::move(mul), 0);

  // Two-sided orbits of X = u - 1 under X -> (1 + E_ij) X (row i += row j)
  // and X -> X (1 + E_ij) (column j += column i).
  std::vector<int> parent(static_cast<std::size_t>(order));
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < order; ++a) {
    const auto& x = decoded[a];
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = i + 1; j < sz; ++j) {
        std::vector<int> row_op = x;
        std::vector<int> col_op = x;
        for (std::size_t c = 0; c < sz; ++c) row_op[i * sz + c] += x[j * sz + c];
        for (std::size_t r = 0; r < sz; ++r) col_op[r * sz + j] += x[r * sz + i];
        for (const auto* image : {&row_op, &col_op}) {
          const int b = codec.encode(*image);
          parent[find_root(parent, a)] = find_root(parent, b);
        }
      }
    }
  }

  // Each orbit holds exactly one support that is a partial matching; that
  // support is the arc set labelling the orbit.
  std::map<int, std::vector<std::vector<Arc>>> orbit_supports;
  for (int a = 0; a < order; ++a) {
    const auto& x = decoded[a];
    std::vector<Arc> support;
    std::vector<int> row_hits(sz, 0), col_hits(sz, 0);
    bool matching = true;
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = i + 1; j < sz; ++j) {
        if (x[i * sz + j] == 0) continue;
        support.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
        matching = matching && ++row_hits[i] == 1 && ++col_hits[j] == 1;
      }
    }
    if (!matching) continue;
    auto& supports = orbit_supports[find_root(parent, a)];
    if (std::find(supports.begin(), supports.end(), support) == supports.end()) supports.push_back(support);
  }

  std::map<std::vector<Arc>, std::vector<int>> by_label;
  for (int a = 0; a < order; ++a) {
    const auto it = orbit_supports.find(find_root(parent, a));
    if (it == orbit_supports.end() || it->second.size() != 1) {
      throw InvalidTheory("orbit of element " + std::to_string(a) + " has no unique matching representative");
    }
    by_label[it->second.front()].push_back(a);
  }

  std::vector<SetPartition> labels;
  std::vector<std::vector<int>> classes;
  for_each_partition(n, [&](const SetPartition& sigma) {
    const auto it = by_label.find(sigma.arcs());
    if (it == by_label.end()) throw InvalidTheory("no superclass for " + sigma.block_string());
    classes.push_back(it->second);
    labels.push_back(sigma);
  });
  std::vector<ClassFunction> chars;
  for (const SetPartition& pi : labels) {
    ClassFunction row;
    for (const SetPartition& sigma : labels) row.push_back(character_value(pi, sigma, FieldParam(p)).get_d());
    chars.push_back(std::move(row));
  }
  SuperTheory theory(std::move(group), std::move(classes), std::move(chars));
  return {n, p, std::move(labels), std::move(theory)};
}

}  // namespace

UnitriangularTheory unitriangular_theory(int n, std::int64_t q) {
  const FieldParam field(q);
  if (n < 1) throw ValidationError("unitriangular size must be at least 1");
  const std::int64_t entries = static_cast<std::int64_t>(n) * (n - 1) / 2;
  double order = 1;
  for (std::int64_t t = 0; t < entries; ++t) order *= static_cast<double>(q);
  if (order > kMaxGroupOrder) {
    throw SizeLimitError("U_" + std::to_string(n) + "(F_" + std::to_string(q) + ") has more than " +
                         std::to_string(kMaxGroupOrder) + " elements");
  }
  if (is_prime(q)) return matrix_theory(n, static_cast<int>(q));
  if (n == 2 && field.is_prime_power()) {
    // U_2(F_q) is the additive group of F_q, whatever the field structure
    int p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    for (std::int64_t m = q; m > 1; m /= p) ++k;
    FiniteGroup group = FiniteGroup::elementary_abelian(p, k);
    const SetPartition lo = SetPartition::singletons(2);
    const SetPartition hi = SetPartition::from_arcs(2, {{1, 2}});
    std::vector<int> rest;
    for (int g = 1; g < group.order(); ++g) rest.push_back(g);
    std::vector<ClassFunction> chars;
    for (const auto* pi : {&hi, &lo}) {
      chars.push_back({character_value(*pi, hi, field).get_d(), character_value(*pi, lo, field).get_d()});
    }
    SuperTheory theory(std::move(group), {rest, {0}}, std::move(chars));
    return {2, q, {hi, lo}, std::move(theory)};
  }
  throw ValidationError("U_" + std::to_string(n) + "(F_q) tables need q prime (or a prime power when n = 2), got " +
                        std::to_string(q));
}

SubgroupEmbedding unitriangular_corner_embedding(const UnitriangularTheory& small, const UnitriangularTheory& large) {
  if (small.q != large.q || small.n + 1 != large.n || !is_prime(large.q)) {
    throw ValidationError("corner embedding needs U_{n-1}(F_p) and U_n(F_p) over the same prime");
  }
  const int p = static_cast<int>(large.q);
  const UpperCodec from(small.n, p);
  const UpperCodec to(large.n, p);
  const auto s = static_cast<std::size_t>(small.n);
  const auto l = static_cast<std::size_t>(large.n);
  std::vector<int> injection;
  for (int a = 0; a < from.order(); ++a) {
    const std::vector<int> x = from.decode(a);
    std::vector<int> y(l * l, 0);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) y[i * l + j] = x[i * s + j];
    injection.push_back(to.encode(y));
  }
  return SubgroupEmbedding(small.theory, large.theory, std::move(injection));
}

}  // namespace spl
