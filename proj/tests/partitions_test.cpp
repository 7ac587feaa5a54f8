#include "doctest.h"
#include "support.hpp"

#include <set>

using namespace wfh;
using wfh::test::mp;

namespace {

// p-core by repeatedly stripping any removable rim hook of length p.
Partition core_by_stripping(Partition lambda, int p) {
  while (true) {
    auto strips = border_strips(lambda, p);
    if (strips.empty()) return lambda;
    lambda = strips.front().result;
  }
}

bool is_partition_diagram(const Partition& outer, const std::vector<std::pair<int, int>>& removed, const Partition& inner) {
  std::set<std::pair<int, int>> cells;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = 0; c < outer[r]; ++c) cells.insert({r, c});
  for (const auto& b : removed)
    if (!cells.erase(b)) return false;
  std::set<std::pair<int, int>> want;
  for (int r = 0; r < inner.length(); ++r)
    for (int c = 0; c < inner[r]; ++c) want.insert({r, c});
  return cells == want;
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("construction rejects malformed parts") {
    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK_THROWS_AS(Partition({2, 0}), Error);
    CHECK(Partition::from_unsorted({1, 3, 2}) == Partition{3, 2, 1});
    CHECK(Partition{3, 1, 1}.multiplicity(1) == 2);
  }

  TEST_CASE("partition counts") {
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n < 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
    CHECK(partitions_of(3).front() == Partition{3});
  }

  TEST_CASE("conjugation is an involution") {
    for (int i = 0; i < 200; ++i) {
      Partition p = test::random_partition(test::uniform(0, 12));
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().size() == p.size());
    }
  }

  TEST_CASE("contents") {
    CHECK(contents(Partition{2, 1}) == std::vector<int>{0, 1, -1});
    for (int i = 0; i < 100; ++i) {
      Partition p = test::random_partition(test::uniform(1, 10));
      auto c = contents(p), d = contents(p.conjugate());
      long long sum = 0, dsum = 0;
      for (int x : c) sum += x;
      for (int x : d) dsum += x;
      CHECK(sum == -dsum);
    }
  }

  TEST_CASE("2-cores of partitions of 3") {
    CHECK(p_core(Partition{3}, 2) == Partition{1});
    CHECK(p_core(Partition{1, 1, 1}, 2) == Partition{1});
    CHECK(p_core(Partition{2, 1}, 2) == Partition{2, 1});
    CHECK_THROWS_AS(p_core(Partition{2}, 1), Error);
  }

  TEST_CASE("abacus cores agree with rim-hook stripping") {
    for (int p : {2, 3, 5})
      for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : partitions_of(n)) CHECK(p_core(lambda, p) == core_by_stripping(lambda, p));
  }

  TEST_CASE("border strips remove a connected rim of the right size") {
    for (int n = 1; n <= 8; ++n)
      for (const auto& lambda : partitions_of(n))
        for (int k = 1; k <= n; ++k)
          for (const auto& s : border_strips(lambda, k)) {
            CHECK(static_cast<int>(s.boxes.size()) == k);
            CHECK(s.result.size() == n - k);
            CHECK(is_partition_diagram(lambda, s.boxes, s.result));
            std::set<int> rows;
            for (const auto& b : s.boxes) rows.insert(b.first);
            CHECK(s.height == static_cast<int>(rows.size()) - 1);
          }
  }

  TEST_CASE("reduced cycle types") {
    CHECK(reduce_cycle_type(Partition{3, 2, 1, 1}) == Partition{2, 1});
    CHECK(unreduce_cycle_type(Partition{2, 1}, 7) == Partition{3, 2, 1, 1});
    CHECK_FALSE(unreduce_cycle_type(Partition{2, 1}, 4).has_value());
    CHECK(sym_class_size(Partition{2, 1, 1}, 4) == 6);
    BigInt total = 0;
    for (const auto& mu : partitions_of(6)) total += sym_class_size(mu, 6);
    CHECK(total == 720);
  }

  TEST_CASE("multipartition text syntax") {
    Multipartition m = mp("[(2,1)@0;(1)@1]");
    CHECK(m.size() == 4);
    CHECK(m.length() == 3);
    CHECK(m.affected() == 6);
    CHECK(to_string(m) == "[(2,1)@0;(1)@1]");
    CHECK(mp("(2,1)") == Multipartition::concentrated(0, Partition{2, 1}));
    CHECK(to_string(mp("(2,1)"), true) == "(2,1)");
    CHECK(mp("()").empty());
    CHECK_THROWS_AS(mp("[(2,1)@0;(1)@0]"), Error);
    CHECK_THROWS_AS(mp("(1,2)"), Error);
    CHECK_THROWS_AS(mp("[(1)@x]"), Error);
  }

  TEST_CASE("partial reduction round trip") {
    for (int n = 0; n <= 6; ++n)
      for (const auto& type : multipartitions_of(n, 3)) {
        Multipartition red = partially_reduce(type);
        CHECK(red.affected() <= n);
        CHECK(unreduce_partial(red, n) == type);
      }
    CHECK(hat(mp("[(1)@0;(2)@1]")) == mp("[(1)@0;(3)@1]"));
    CHECK(reduce_partial_label(mp("[(1)@0;(3,1)@1]")) == mp("[(1)@0;(2)@1]"));
  }

  TEST_CASE("multipartition counts and order") {
    CHECK(multipartitions_of(2, 2).size() == 5);
    CHECK(multipartitions_of(3, 2).size() == 10);
    auto all = multipartitions_of(3, 3);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<Multipartition>(all.begin(), all.end()).size() == all.size());
  }
}
