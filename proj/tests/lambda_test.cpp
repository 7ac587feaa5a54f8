#include "doctest.h"
#include "support.hpp"

#include "wfh/lambda.hpp"
#include "wfh/wreath.hpp"

using namespace wfh;
using wfh::test::mp;

namespace {

using Poly = std::map<std::vector<int>, BigInt>;
constexpr int kVars = 6;

// m_lambda in kVars commuting variables.
Poly monomial(const Partition& lambda) {
  std::vector<int> e(kVars, 0);
  for (int i = 0; i < lambda.length(); ++i) e[i] = lambda[i];
  std::sort(e.begin(), e.end());
  Poly out;
  do out[e] = 1;
  while (std::next_permutation(e.begin(), e.end()));
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(kVars);
      for (int i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// Coefficient of m_nu: the coefficient of x^nu with nu in decreasing order.
BigInt m_coefficient(const Poly& f, const Partition& nu) {
  std::vector<int> e(kVars, 0);
  for (int i = 0; i < nu.length(); ++i) e[i] = nu[i];
  auto it = f.find(e);
  return it == f.end() ? BigInt(0) : it->second;
}

Multipartition at0(const Partition& p) { return Multipartition::concentrated(0, p); }

std::vector<Multipartition> labels_upto(int d, int l) {
  std::vector<Multipartition> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& m : multipartitions_of(k, l)) out.push_back(m);
  return out;
}

}  // namespace

TEST_SUITE("lambdagamma") {
  TEST_CASE("trivial group gives the classical monomial products") {
    GroupData g = builtin_group("trivial");
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4 - a; ++b)
        for (const auto& lambda : partitions_of(a))
          for (const auto& mu : partitions_of(b)) {
            if (lambda.length() + mu.length() > kVars) continue;
            WeightedSymFn prod = wsf_basis_product(at0(lambda), at0(mu), g);
            Poly oracle = poly_mul(monomial(lambda), monomial(mu));
            for (const auto& nu : partitions_of(a + b)) CHECK(prod.coefficient(at0(nu)) == m_coefficient(oracle, nu));
          }
  }

  TEST_CASE("C2 products") {
    GroupData g = builtin_group("C2");
    CHECK(wsf_basis_product(mp("[(1)@1]"), mp("[(1)@1]"), g) ==
          WeightedSymFn::basis(mp("[(2)@0]")) + WeightedSymFn::basis(mp("[(1,1)@1]"), 2));
    CHECK(wsf_basis_product(mp("[(1)@0]"), mp("[(1)@1]"), g) ==
          WeightedSymFn::basis(mp("[(2)@1]")) + WeightedSymFn::basis(mp("[(1)@0;(1)@1]")));
  }

  TEST_CASE("products are compatible with evaluation in the wreath centre") {
    for (const char* name : {"C2", "S3"}) {
      Wreath w(builtin_group(name));
      auto labels = labels_upto(2, w.class_count());
      for (const auto& a : labels)
        for (const auto& b : labels) {
          int n = a.length() + b.length();
          if (n == 0) continue;
          WeightedSymFn prod = wsf_basis_product(a, b, w.group());
          CentreElement lhs(n);
          for (const auto& [nu, c] : prod.terms()) lhs += w.evaluate_weighted_monomial_central(nu, n).scaled(c);
          CentreElement rhs =
              w.centre_multiply(w.evaluate_weighted_monomial_central(a, n), w.evaluate_weighted_monomial_central(b, n));
          CHECK(lhs == rhs);
        }
    }
  }

  TEST_CASE("ring laws and grading") {
    for (const char* name : {"C2", "S3"}) {
      GroupData g = builtin_group(name);
      auto labels = labels_upto(2, g.class_count());
      for (int i = 0; i < 40; ++i) {
        const auto& a = labels[test::uniform(0, static_cast<int>(labels.size()) - 1)];
        const auto& b = labels[test::uniform(0, static_cast<int>(labels.size()) - 1)];
        const auto& c = labels[test::uniform(0, static_cast<int>(labels.size()) - 1)];
        WeightedSymFn ab = wsf_basis_product(a, b, g);
        CHECK(ab == wsf_basis_product(b, a, g));
        CHECK(wsf_multiply(ab, WeightedSymFn::basis(c), g) ==
              wsf_multiply(WeightedSymFn::basis(a), wsf_basis_product(b, c, g), g));
        for (const auto& [nu, coeff] : ab.terms()) CHECK(nu.size() == a.size() + b.size());
      }
      CHECK(wsf_basis_product(Multipartition(), labels.back(), g) == WeightedSymFn::basis(labels.back()));
    }
  }

  TEST_CASE("coproduct, counit and antipode") {
    TensorPairSum d = coproduct(mp("(1,1)"));
    TensorPairSum want{{{mp("(1,1)"), mp("()")}, 1}, {{mp("(1)"), mp("(1)")}, 1}, {{mp("()"), mp("(1,1)")}, 1}};
    CHECK(d == want);
    CHECK(counit(WeightedSymFn::basis(mp("()"), 5)) == 5);
    CHECK(counit(WeightedSymFn::basis(mp("(2)"))) == 0);

    GroupData triv = builtin_group("trivial");
    CHECK(antipode(mp("(1)"), triv) == WeightedSymFn::basis(mp("(1)"), -1));
    CHECK(antipode(mp("(2,1)"), triv) == WeightedSymFn::basis(mp("(3)"), 2) + WeightedSymFn::basis(mp("(2,1)")));

    for (const char* name : {"trivial", "C2"}) {
      GroupData g = builtin_group(name);
      for (const auto& lambda : labels_upto(3, g.class_count())) {
        // sum S(x) y over the coproduct equals counit times one.
        WeightedSymFn total;
        for (const auto& [pair, c] : coproduct(lambda))
          total += wsf_multiply(antipode(pair.first, g), WeightedSymFn::basis(pair.second), g).scaled(c);
        CHECK(total == WeightedSymFn::one().scaled(counit(WeightedSymFn::basis(lambda))));
        CHECK(antipode(antipode(WeightedSymFn::basis(lambda), g), g) == WeightedSymFn::basis(lambda));
      }
      auto labels = labels_upto(2, g.class_count());
      for (const auto& a : labels)
        for (const auto& b : labels) {
          TensorPairSum lhs = coproduct(wsf_basis_product(a, b, g));
          CHECK(lhs == tensor_multiply(coproduct(a), coproduct(b), g));
        }
    }
  }

  TEST_CASE("Smith normal form") {
    std::vector<std::vector<BigInt>> m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    CHECK(smith_invariant_factors(m) == std::vector<BigInt>{2, 6, 12});
    CHECK(smith_invariant_factors({{0, 0}, {0, 3}}) == std::vector<BigInt>{3});
    CHECK(smith_invariant_factors({{4, 6}}) == std::vector<BigInt>{2});
    CHECK(smith_invariant_factors({}).empty());
  }

  TEST_CASE("module of indecomposables") {
    GroupData triv = builtin_group("trivial");
    for (int d = 1; d <= 4; ++d) {
      Indecomposables q = indecomposables(triv, d);
      CHECK(q.free_rank == 1);
      CHECK(q.torsion.empty());
      CHECK(q.basis_size == static_cast<int>(partitions_of(d).size()));
    }
    GroupData c2 = builtin_group("C2");
    CHECK(indecomposables(c2, 1).free_rank == 2);
    Indecomposables q = indecomposables(c2, 2);
    CHECK(q.basis_size == 5);
    CHECK(q.free_rank == 2);
    CHECK(q.torsion == std::vector<BigInt>{2});
  }

  TEST_CASE("elementary basis") {
    auto e = to_elementary_basis(WeightedSymFn::basis(mp("(2)")));
    CHECK(e == std::map<Partition, BigInt>{{Partition{1, 1}, 1}, {Partition{2}, -2}});
    CHECK(to_elementary_basis(WeightedSymFn::basis(mp("(1,1,1)"))) == std::map<Partition, BigInt>{{Partition{3}, 1}});
    CHECK(to_string(WeightedSymFn::basis(mp("[(1)@0;(1)@1]"), -2), false) == "-2*m[(1)@0;(1)@1]");
  }
}
