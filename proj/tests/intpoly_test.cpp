#include "doctest.h"
#include "support.hpp"

#include "wfh/intpoly.hpp"

using namespace wfh;

namespace {

IntValuedPoly random_poly(int max_degree) {
  std::vector<BigInt> c(test::uniform(0, max_degree + 1));
  for (auto& x : c) x = test::uniform(-20, 20);
  return IntValuedPoly(c);
}

}  // namespace

TEST_SUITE("intpoly") {
  TEST_CASE("binomial basis evaluation") {
    IntValuedPoly p = IntValuedPoly::binomial_basis(2);
    CHECK(p.evaluate(5) == 10);
    CHECK(p.evaluate(-1) == 1);
    CHECK(p.degree() == 2);
    CHECK(IntValuedPoly().degree() == -1);
    CHECK(IntValuedPoly({1, 0, 0}).degree() == 0);
  }

  TEST_CASE("interpolation reproduces values") {
    for (int i = 0; i < 200; ++i) {
      IntValuedPoly p = random_poly(6);
      long long n0 = test::uniform(-3, 5);
      std::vector<BigInt> values;
      for (int k = 0; k <= std::max(p.degree(), 0) + 2; ++k) values.push_back(p.evaluate(n0 + k));
      CHECK(ivp_from_values(n0, values) == p);
    }
  }

  TEST_CASE("ring operations agree pointwise") {
    for (int i = 0; i < 200; ++i) {
      IntValuedPoly p = random_poly(4), q = random_poly(4);
      long long a = test::uniform(-4, 4);
      for (long long n = -3; n <= 8; ++n) {
        CHECK((p * q).evaluate(n) == p.evaluate(n) * q.evaluate(n));
        CHECK((p + q).evaluate(n) == p.evaluate(n) + q.evaluate(n));
        CHECK((p - q).evaluate(n) == p.evaluate(n) - q.evaluate(n));
        CHECK(p.shifted(a).evaluate(n) == p.evaluate(n + a));
      }
      CHECK(IntValuedPoly::shifted_binomial(a, 3).evaluate(10) == binomial(BigInt(10 - a), 3));
    }
  }

  TEST_CASE("text round trip") {
    CHECK(to_string(IntValuedPoly({0, 0, 1})) == "C(t,2)");
    CHECK(to_string(IntValuedPoly({3, -1, 0, 2})) == "3 - C(t,1) + 2*C(t,3)");
    CHECK(to_string(IntValuedPoly()) == "0");
    for (int i = 0; i < 100; ++i) {
      IntValuedPoly p = random_poly(5);
      CHECK(parse_intpoly(to_string(p)) == p);
    }
    CHECK_THROWS_AS(parse_intpoly("C(t,"), Error);
  }

  TEST_CASE("stable interpolation") {
    auto oracle = [](long long n) { return binomial(BigInt(n), 3) - 2 * BigInt(n); };
    CHECK(interpolate_stable(oracle, 0, 5) == IntValuedPoly({0, -2, 0, 1}));
    auto exponential = [](long long n) { return BigInt(1) << n; };
    try {
      interpolate_stable(exponential, 0, 3);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegreeCapExceeded);
    }
  }
}
