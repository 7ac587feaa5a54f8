#include "doctest.h"
#include "support.hpp"

#include "wfh/fh.hpp"

using namespace wfh;
using wfh::test::mp;

namespace {

std::vector<Multipartition> labels_upto(int d, int l) {
  std::vector<Multipartition> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& m : multipartitions_of(k, l)) out.push_back(m);
  return out;
}

FHAlgebra& trivial_fh() {
  static FHAlgebra fh(builtin_group("trivial"));
  return fh;
}

FHAlgebra& c2_fh() {
  static FHAlgebra fh(builtin_group("C2"));
  return fh;
}

}  // namespace

TEST_SUITE("fhcore") {
  TEST_CASE("transposition square") {
    FHAlgebra& fh = trivial_fh();
    FHElement sq = fh.product_of_basis(mp("(1)"), mp("(1)"));
    CHECK(to_string(sq, true) == "C(t,2)*K() + 3*K(2) + 2*K(1,1)");
    CHECK(fh.structure_poly(mp("(1)"), mp("(1)"), mp("()")) == IntValuedPoly::binomial_basis(2));
    CHECK(fh.structure_poly(mp("(1)"), mp("(1)"), mp("(3)")).is_zero());
  }

  TEST_CASE("interpolation starts where the target class fits") {
    // Sampling the (2) coefficient of K(1)^2 from n = 0 would see 0 at n = 2.
    FHAlgebra& fh = trivial_fh();
    const Wreath& w = fh.wreath();
    for (int n = 0; n <= 5; ++n) {
      auto target = unreduce_partial(mp("(2)"), n);
      auto one = unreduce_partial(mp("(1)"), n);
      if (!one) continue;
      BigInt c = target ? w.centre_product(*one, *one, n).coefficient(*target) : BigInt(0);
      CHECK(c == (n >= 3 ? 3 : 0));
    }
    CHECK(fh.structure_poly(mp("(1)"), mp("(1)"), mp("(2)")) == IntValuedPoly::constant(3));
  }

  TEST_CASE("specialisation") {
    FHAlgebra& fh = trivial_fh();
    CentreElement z = fh.specialize(FHElement::basis(mp("(1)")), 4);
    REQUIRE(z.terms().size() == 1);
    CHECK(fh.wreath().class_size(z.terms().begin()->first, 4) == 6);
    CHECK(fh.specialize(FHElement::basis(mp("(2)")), 2).is_zero());
    CHECK(fh.specialize(FHElement::basis(mp("()"), IntValuedPoly::binomial_basis(2)), 5).terms().begin()->second == 10);
  }

  TEST_CASE("specialisation is a homomorphism") {
    for (FHAlgebra* fh : {&trivial_fh(), &c2_fh()}) {
      auto labels = labels_upto(2, fh->group().class_count());
      int top = fh->group().order() == 1 ? 5 : 4;
      for (const auto& a : labels)
        for (const auto& b : labels) {
          FHElement prod = fh->product_of_basis(a, b);
          for (int n = 0; n <= top; ++n) {
            CentreElement lhs = fh->specialize(prod, n);
            CentreElement rhs = fh->wreath().centre_multiply(fh->specialize(FHElement::basis(a), n),
                                                             fh->specialize(FHElement::basis(b), n));
            CHECK(lhs == rhs);
          }
        }
    }
  }

  TEST_CASE("filtrations") {
    FHAlgebra& fh = trivial_fh();
    auto labels = labels_upto(3, 1);
    for (const auto& a : labels)
      for (const auto& b : labels) {
        if (a.size() + b.size() > 4) continue;
        FHElement prod = fh.product_of_basis(a, b);
        for (const auto& [nu, p] : prod.terms()) {
          CHECK(transposition_degree(nu) <= transposition_degree(a) + transposition_degree(b));
          CHECK(moving_degree(nu) <= moving_degree(a) + moving_degree(b));
        }
        // Top moving-degree coefficient: disjoint supports, counted by multiplicities.
        Multipartition u = multipartition_union(a, b);
        BigInt want = 1;
        for (int i = 1; i <= u.size(); ++i) {
          int mu = u[0].multiplicity(i), ma = a[0].multiplicity(i);
          want *= binomial(BigInt(mu), ma);
        }
        CHECK(prod.coefficient(u) == IntValuedPoly::constant(want));
      }
  }

  TEST_CASE("weighted monomials") {
    FHAlgebra& fh = trivial_fh();
    CHECK(fh.psi_m(mp("()")) == FHElement::one());
    CHECK(fh.psi_m(mp("(1)")) == FHElement::basis(mp("(1)")));
    for (int r = 1; r <= 3; ++r) {
      FHElement want;
      for (const auto& mu : partitions_of(r)) want += FHElement::basis(Multipartition::concentrated(0, mu));
      CHECK(fh.psi_m(Multipartition::concentrated(0, Partition(std::vector<int>(r, 1)))) == want);
    }
    // Leading term.
    for (const auto& lambda : labels_upto(3, 2)) {
      FHElement x = c2_fh().psi_m(lambda);
      Multipartition lead = leading_label(lambda);
      CHECK(x.coefficient(lead) == IntValuedPoly::constant(1));
      for (const auto& [nu, p] : x.terms()) {
        CHECK(transposition_degree(nu) <= transposition_degree(lead));
        CHECK(moving_degree(nu) <= moving_degree(lead));
      }
    }
  }

  TEST_CASE("R part") {
    FHAlgebra& fh = c2_fh();
    CHECK(fh.psi_r(ExponentVector{0, 0}) == FHElement::one());
    CHECK(fh.psi_r(ExponentVector{1, 2}) == FHElement::basis(mp("[(1,1)@1]"), IntValuedPoly::shifted_binomial(2, 1)));
    CHECK(trivial_fh().psi_r(ExponentVector{3}) == FHElement::basis(mp("()"), IntValuedPoly::binomial_basis(3)));
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= 3; ++k)
        for (const auto& N : exponent_vectors_of(k, 2)) CHECK(fh.specialize(fh.psi_r(N), n) == ev_r(N, n));
  }

  TEST_CASE("character symmetric functions invert the isomorphism") {
    for (const auto& mu : labels_upto(3, 1)) {
      TensorElement f = trivial_fh().char_sym_fn(mu);
      CHECK(trivial_fh().psi(f) == FHElement::basis(mu));
    }
    for (const auto& mu : labels_upto(2, 2)) {
      TensorElement f = c2_fh().char_sym_fn(mu);
      CHECK(c2_fh().psi(f) == FHElement::basis(mu));
    }
    CHECK(to_string_elementary(trivial_fh().char_sym_fn(mp("(2)"))) == "e1^2 - 2*e2 - C(t,2)");
    CHECK(to_string_elementary(trivial_fh().char_sym_fn(mp("(1)"))) == "e1");
  }
}
