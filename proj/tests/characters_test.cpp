#include "doctest.h"
#include "support.hpp"

#include "wfh/characters.hpp"

#include <set>

using namespace wfh;
using wfh::test::mp;

namespace {

BigInt centraliser_order(const Partition& mu) {
  BigInt z = 1;
  for (int i = 1; i <= mu.size(); ++i) {
    int m = mu.multiplicity(i);
    for (int k = 0; k < m; ++k) z *= i;
    z *= factorial(m);
  }
  return z;
}

BigInt hook_dimension(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(lambda.size()) / hooks;
}

Multipartition identity_type(int n) { return Multipartition::concentrated(0, Partition(std::vector<int>(n, 1))); }

void check_is_partition_of_irreps(const BlockPartition& b, const std::vector<Multipartition>& irreps) {
  std::set<Multipartition> seen;
  for (const auto& block : b.blocks)
    for (const auto& lambda : block) CHECK(seen.insert(lambda).second);
  CHECK(seen == std::set<Multipartition>(irreps.begin(), irreps.end()));
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("symmetric group characters") {
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {3}) == -1);
    CHECK(mn_character({2, 1}, {2, 1}) == 0);
    CHECK(mn_character({1, 1, 1, 1}, {4}) == -1);
    for (int n = 1; n <= 6; ++n) {
      auto parts = partitions_of(n);
      for (const auto& lambda : parts) {
        CHECK(mn_character(lambda, Partition(std::vector<int>(n, 1))) == hook_dimension(lambda));
        for (const auto& rho : parts) {
          Rational s = 0;
          for (const auto& mu : parts) s += Rational(mn_character(lambda, mu) * mn_character(rho, mu), centraliser_order(mu));
          CHECK(s == (lambda == rho ? 1 : 0));
        }
      }
    }
  }

  TEST_CASE("symmetric group central characters from contents") {
    CHECK(sym_central_character_content({5, 2, 1}, {1}, 8) == 7);
    CHECK(sym_central_character_content({3}, {2}, 3) == 2);
    CHECK(sym_central_character_content({2, 2}, {}, 4) == 1);
    // Against class size times character ratio.
    for (int n = 2; n <= 5; ++n)
      for (const auto& lambda : partitions_of(n))
        for (const auto& mu : partitions_of(n)) {
          Partition red = reduce_cycle_type(mu);
          Rational want(sym_class_size(mu, n) * mn_character(lambda, mu), hook_dimension(lambda));
          CHECK(Rational(sym_central_character_content(lambda, red, n)) == want);
        }
  }

  TEST_CASE("wreath characters") {
    Wreath triv(builtin_group("trivial"));
    for (int n = 1; n <= 3; ++n)
      for (const auto& lambda : partitions_of(n))
        for (const auto& mu : partitions_of(n))
          CHECK(wreath_character(Multipartition::concentrated(0, lambda), Multipartition::concentrated(0, mu), triv) ==
                Rational(mn_character(lambda, mu)));

    Wreath c2(builtin_group("C2"));
    CHECK(wreath_character(mp("[(1)@0;(1)@1]"), mp("[(1)@0;(1)@1]"), c2) == 0);
    for (const char* name : {"C2", "S3"}) {
      Wreath w(builtin_group(name));
      const auto& irreps = w.group().irreps();
      int top = w.group().order() == 2 ? 3 : 2;
      for (int n = 1; n <= top; ++n)
        for (const auto& lambda : multipartitions_of(n, static_cast<int>(irreps.size()))) {
          BigInt dim = factorial(n);
          for (const auto& [chi, part] : lambda.components()) {
            dim /= factorial(part.size());
            for (int k = 0; k < part.size(); ++k) dim *= irreps[chi].dim;
            dim *= hook_dimension(part);
          }
          CHECK(wreath_character(lambda, identity_type(n), w) == Rational(dim));
        }
    }
  }

  TEST_CASE("content evaluation matches the character sum") {
    FHAlgebra fh(builtin_group("C2"));
    for (int n = 1; n <= 3; ++n)
      for (const auto& lambda : multipartitions_of(n, 2))
        for (const auto& mu : multipartitions_of(n, 2)) {
          Multipartition label = partially_reduce(mu);
          Rational chi = wreath_character(lambda, mu, fh.wreath());
          Rational want = chi * Rational(fh.wreath().class_size(mu, n)) / wreath_character(lambda, identity_type(n), fh.wreath());
          CHECK(wreath_central_character_content(lambda, label, fh) == want);
        }
  }

  TEST_CASE("blocks") {
    BlockPartition b = nakayama_blocks(3, 2);
    CHECK(b.blocks.size() == 2);
    CHECK(to_string(b, true).find("block 1:") != std::string::npos);
    CHECK(nakayama_blocks(4, 2).blocks.size() == 1);
    CHECK(nakayama_blocks(4, 5).blocks.size() == partitions_of(4).size());
    for (int p : {2, 3})
      for (int n = 1; n <= 6; ++n) {
        std::vector<Multipartition> irreps;
        for (const auto& lambda : partitions_of(n)) irreps.push_back(Multipartition::concentrated(0, lambda));
        check_is_partition_of_irreps(nakayama_blocks(n, p), irreps);
      }
    for (const char* name : {"C2", "S3"}) {
      FHAlgebra fh(builtin_group(name));
      for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n) {
          BlockReport r = cross_validate_blocks(fh, n, p);
          CHECK(r.agrees);
          CHECK(r.discrepancies.empty());
          check_is_partition_of_irreps(r.predicted, multipartitions_of(n, fh.group().irrep_count()));
        }
    }
    CHECK_THROWS_AS(wreath_blocks(builtin_group("C3"), 2, 3), Error);
  }
}
