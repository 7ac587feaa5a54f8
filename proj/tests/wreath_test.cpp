#include "doctest.h"
#include "support.hpp"

#include "wfh/wreath.hpp"

#include <map>

using namespace wfh;
using wfh::test::mp;

namespace {

WreathElement random_element(const GroupData& g, int n) {
  std::vector<int> colors(n), perm(n);
  for (int i = 0; i < n; ++i) {
    colors[i] = test::uniform(0, g.order() - 1);
    perm[i] = i;
  }
  std::shuffle(perm.begin(), perm.end(), test::rng());
  return make_element(colors, perm);
}

// Product coefficients counted over pairs with a fixed product in each class.
CentreElement centre_product_by_pairs(const Wreath& w, const Multipartition& mu, const Multipartition& nu, int n) {
  std::vector<WreathElement> as, bs;
  w.for_each_in_class(mu, n, [&](const WreathElement& x) { as.push_back(x); });
  w.for_each_in_class(nu, n, [&](const WreathElement& x) { bs.push_back(x); });
  CentreElement out(n);
  for (const auto& lambda : multipartitions_of(n, w.class_count())) {
    WreathElement target = w.representative(lambda, n);
    BigInt count = 0;
    for (const auto& a : as)
      for (const auto& b : bs)
        if (w.multiply(a, b) == target) ++count;
    out.add(lambda, count);
  }
  return out;
}

}  // namespace

TEST_SUITE("wreath") {
  TEST_CASE("group law") {
    for (const char* name : {"C2", "S3"}) {
      Wreath w(builtin_group(name));
      for (int i = 0; i < 200; ++i) {
        int n = test::uniform(1, 5);
        WreathElement a = random_element(w.group(), n), b = random_element(w.group(), n), c = random_element(w.group(), n);
        CHECK(w.multiply(w.multiply(a, b), c) == w.multiply(a, w.multiply(b, c)));
        CHECK(w.multiply(a, w.inverse(a)) == identity_element());
        CHECK(w.multiply(identity_element(), a) == a);
        // Conjugation preserves the cycle type.
        CHECK(w.cycle_type(w.multiply(w.multiply(b, a), w.inverse(b)), n) == w.cycle_type(a, n));
      }
    }
  }

  TEST_CASE("class sizes match enumeration") {
    for (const char* name : {"trivial", "C2", "S3"}) {
      Wreath w(builtin_group(name));
      for (int n = 0; n <= 3; ++n) {
        std::map<Multipartition, BigInt> counts;
        w.for_each_element(n, [&](const WreathElement& x) { counts[w.cycle_type(x, n)] += 1; });
        auto types = multipartitions_of(n, w.class_count());
        CHECK(counts.size() == types.size());
        for (const auto& type : types) {
          CHECK(w.class_size(type, n) == counts[type]);
          CHECK(w.cycle_type(w.representative(type, n), n) == type);
        }
      }
    }
  }

  TEST_CASE("centre product matches pair counting") {
    for (const char* name : {"trivial", "C2", "S3"}) {
      Wreath w(builtin_group(name));
      int max_n = w.group().order() > 2 ? 2 : 3;
      for (int n = 1; n <= max_n; ++n) {
        auto types = multipartitions_of(n, w.class_count());
        for (const auto& mu : types)
          for (const auto& nu : types) CHECK(w.centre_product(mu, nu, n) == centre_product_by_pairs(w, mu, nu, n));
      }
    }
  }

  TEST_CASE("class sums multiply like centre products") {
    Wreath w(builtin_group("C2"));
    auto a = mp("[(2,1)@0;(1)@1]"), b = mp("[(1,1)@0;(1,1)@1]");
    CentreElement direct = w.to_centre(w.multiply(w.class_sum(a, 4), w.class_sum(b, 4)));
    CHECK(direct == w.centre_product(a, b, 4));
    CHECK(w.from_centre(direct) == w.multiply(w.class_sum(a, 4), w.class_sum(b, 4)));
  }

  TEST_CASE("transposition square") {
    Wreath w(builtin_group("trivial"));
    CHECK(to_string(w.centre_product(mp("(2,1,1)"), mp("(2,1,1)"), 4), true) ==
          "2*X'(2,2) + 3*X'(3,1) + 6*X'(1,1,1,1)");
  }

  TEST_CASE("non-central elements are rejected") {
    Wreath w(builtin_group("trivial"));
    AlgebraElement x(3);
    x.add(make_element({0, 0, 0}, {1, 0, 2}), 1);
    try {
      w.to_centre(x);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotCentral);
    }
  }

  TEST_CASE("enumeration cap") {
    Wreath w(builtin_group("S3"));
    auto saved = max_enumeration();
    set_max_enumeration(100);
    try {
      w.for_each_element(3, [](const WreathElement&) {});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ResourceLimit);
    }
    set_max_enumeration(saved);
  }

  TEST_CASE("JM elements commute") {
    Wreath w(builtin_group("S3"));
    const int n = 3;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int c = 0; c < 3; ++c) {
          AlgebraElement a = w.jm_element(i, c, n), b = w.jm_element(j, 0, n);
          CHECK(w.multiply(a, b) == w.multiply(b, a));
        }
    CHECK(w.jm_element(1, 0, n).is_zero());
  }

  TEST_CASE("fast monomial evaluation matches direct expansion") {
    for (const char* name : {"trivial", "C2", "S3"}) {
      Wreath w(builtin_group(name));
      const int l = w.class_count();
      for (int k = 1; k <= (l == 3 ? 2 : 3); ++k)
        for (const auto& lambda : multipartitions_of(k, l))
          for (int n = 0; n <= (l == 3 ? 3 : 4); ++n)
            CHECK(w.evaluate_weighted_monomial_central(lambda, n) == w.to_centre(w.evaluate_weighted_monomial(lambda, n)));
    }
  }
}
