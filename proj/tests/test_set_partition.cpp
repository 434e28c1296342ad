#include <doctest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "superplancherel/error.hpp"
#include "superplancherel/set_partition.hpp"

using namespace spl;

namespace {

std::vector<oracle::Pair> pairs(const std::vector<Arc>& arcs) {
  std::vector<oracle::Pair> out;
  for (const Arc& a : arcs) out.emplace_back(a.left, a.right);
  return out;
}

const SetPartition& example_partition() {
  static const SetPartition p = SetPartition::from_blocks(9, {{1, 5, 7}, {2}, {3, 4, 9}, {6, 8}});
  return p;
}

}  // namespace

TEST_CASE("from_blocks derives the arc set") {
  const SetPartition& p = example_partition();
  CHECK(p.arcs() == std::vector<Arc>{{1, 5}, {3, 4}, {4, 9}, {5, 7}, {6, 8}});
  CHECK(SetPartition::from_blocks(1, {{1}}).arcs().empty());
  CHECK(SetPartition::from_blocks(5, {{1, 4}, {2, 3, 5}}).arcs() == std::vector<Arc>{{1, 4}, {2, 3}, {3, 5}});
}

TEST_CASE("from_blocks canonicalizes block order") {
  const SetPartition p = SetPartition::from_blocks(9, {{8, 6}, {9, 3, 4}, {2}, {7, 1, 5}});
  CHECK(p == example_partition());
  CHECK(p.blocks() == std::vector<std::vector<int>>{{1, 5, 7}, {2}, {3, 4, 9}, {6, 8}});
  CHECK(p.block_string() == "1.5.7|2|3.4.9|6.8");
}

TEST_CASE("from_blocks rejects malformed input and names the element") {
  auto message = [](auto&& fn) {
    try {
      fn();
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message([] { SetPartition::from_blocks(3, {{1, 2}, {2, 3}}); }).find('2') != std::string::npos);
  CHECK(message([] { SetPartition::from_blocks(3, {{1, 2}}); }).find('3') != std::string::npos);
  CHECK(message([] { SetPartition::from_blocks(3, {{1, 2}, {3, 7}}); }).find('7') != std::string::npos);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2, 3}, {}}), ValidationError);
  CHECK_THROWS_AS(SetPartition::from_blocks(0, {}), ValidationError);
}

TEST_CASE("from_arcs chains arcs into blocks") {
  CHECK(SetPartition::from_arcs(9, {{1, 5}, {5, 7}, {3, 4}, {4, 9}, {6, 8}}) == example_partition());
  CHECK(SetPartition::from_arcs(3, {}).blocks() == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(SetPartition::from_arcs(4, {{1, 3}, {2, 4}}).blocks() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(SetPartition::from_arcs(4, {{1, 3}, {1, 4}}), ValidationError);
  CHECK_THROWS_AS(SetPartition::from_arcs(4, {{1, 3}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(SetPartition::from_arcs(4, {{3, 3}}), ValidationError);
  CHECK_THROWS_AS(SetPartition::from_arcs(4, {{3, 2}}), ValidationError);
  CHECK_THROWS_AS(SetPartition::from_arcs(4, {{1, 5}}), ValidationError);
}

TEST_CASE("statistics of the worked examples") {
  const ArcStatistics& s = example_partition().statistics();
  CHECK(s.d == 5);
  CHECK(s.dim == 14);
  CHECK(s.crs == 2);
  CHECK(s.nst == 3);
  CHECK(statistics(SetPartition::singletons(6)) == ArcStatistics{});
  const SetPartition p = SetPartition::from_blocks(5, {{1, 4}, {2, 3, 5}});
  CHECK(p.statistics().dim == 6);
  CHECK(p.statistics().d == 3);
  CHECK(p.statistics().crs == 1);
  CHECK(p.statistics().sing_count == 5);
}

TEST_CASE("regular and singular pairs") {
  const SetPartition p = SetPartition::from_blocks(5, {{1, 4}, {2, 3, 5}});
  CHECK(regular_pairs(p) == std::vector<Arc>{{1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 5}});
  CHECK(singular_pairs(p) == std::vector<Arc>{{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
  CHECK(regular_pairs(SetPartition::singletons(4)).size() == 6);
  CHECK(singular_pairs(SetPartition::singletons(4)).empty());
  const SetPartition chain = SetPartition::from_blocks(3, {{1, 2, 3}});
  CHECK(regular_pairs(chain) == std::vector<Arc>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(singular_pairs(chain).empty());
}

TEST_CASE("nst_weight") {
  const SetPartition crossing = SetPartition::from_blocks(4, {{1, 3}, {2, 4}});
  CHECK(nst_weight(crossing, crossing) == 0);
  CHECK(nst_weight(crossing, SetPartition::singletons(4)) == 0);
  const SetPartition nested = SetPartition::from_blocks(4, {{1, 4}, {2, 3}});
  CHECK(nst_weight(nested, SetPartition::from_blocks(4, {{1}, {2, 3}, {4}})) == 1);
  CHECK(nesting_count_over(nested, {2, 3}) == 1);
  CHECK(nst_weight(nested, nested) == 1);
  CHECK_THROWS_AS(nst_weight(SetPartition::singletons(3), SetPartition::singletons(4)), ValidationError);
}

TEST_CASE("enumeration yields Bell(n) distinct partitions") {
  const auto bell = oracle::bell_numbers(25);
  for (int n = 1; n <= 10; ++n) {
    std::set<std::string> seen;
    std::size_t visits = 0;
    for_each_partition(n, [&](const SetPartition& p) {
      ++visits;
      seen.insert(p.block_string());
    });
    CAPTURE(n);
    CHECK(mpz_class(static_cast<unsigned long>(visits)) == bell[static_cast<std::size_t>(n)]);
    CHECK(seen.size() == visits);
  }
  for (int n = 0; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(mpz_class(std::to_string(bell_number(n))) == bell[static_cast<std::size_t>(n)]);
  }
  CHECK_THROWS(bell_number(26));
}

TEST_CASE("enumeration order is lexicographic in restricted growth strings") {
  PartitionEnumerator e(4);
  std::vector<int> prev = e.labels();
  CHECK(prev == std::vector<int>{0, 0, 0, 0});
  while (e.next()) {
    CHECK(prev < e.labels());
    prev = e.labels();
  }
  CHECK(prev == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("invariants over every partition of [n], n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& blocks : oracle::all_partitions(n)) {
      const SetPartition p = SetPartition::from_blocks(n, blocks);
      const ArcStatistics& s = p.statistics();
      const auto arcs = pairs(p.arcs());
      CAPTURE(p.block_string());

      CHECK(arcs == oracle::arcs_of_blocks(blocks));
      CHECK(SetPartition::from_arcs(n, p.arcs()) == p);
      CHECK(SetPartition::from_restricted_growth(p.restricted_growth()) == p);
      CHECK(s.d + p.block_count() == n);

      const oracle::Stats o = oracle::stats(arcs);
      CHECK(s.d == o.d);
      CHECK(s.dim == o.dim);
      CHECK(s.crs == o.crs);
      CHECK(s.nst == o.nst);
      CHECK(s.adjacent == o.adjacent);
      CHECK(o.crs + o.nst + o.adjacent + o.disjoint == o.d * (o.d - 1) / 2);

      const auto sing = oracle::singular(n, arcs);
      CHECK(pairs(singular_pairs(p)) == sing);
      CHECK(static_cast<std::int64_t>(sing.size()) == s.sing_count);
      CHECK(s.sing_count == 2 * (s.dim - s.d) - s.crs);

      const auto reg = regular_pairs(p);
      CHECK(reg.size() + sing.size() == static_cast<std::size_t>(n * (n - 1) / 2));
      for (const Arc& a : p.arcs()) CHECK(is_regular(p, a));
      for (const Arc& a : reg) CHECK_FALSE(oracle::contains(sing, {a.left, a.right}));
    }
  }
}
