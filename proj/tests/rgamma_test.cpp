#include "doctest.h"
#include "support.hpp"

#include "wfh/rgamma.hpp"

using namespace wfh;

namespace {

// b_N as the x^N coefficient of prod over slots of (1 + sum_c c^{(d)} x_c).
CentreElement b_from_tensor(const Wreath& w, const ExponentVector& N, int n) {
  const int l = w.class_count();
  AlgebraElement total(n);
  std::vector<int> choice(n, -1);  // -1: the constant term
  std::function<void(int, ExponentVector)> rec = [&](int d, ExponentVector left) {
    if (d == n) {
      if (std::any_of(left.begin(), left.end(), [](int x) { return x != 0; })) return;
      AlgebraElement term(n);
      term.add(identity_element(), 1);
      for (int s = 0; s < n; ++s)
        if (choice[s] >= 0) term = w.multiply(term, w.slot_class(s + 1, choice[s], n));
      total += term;
      return;
    }
    choice[d] = -1;
    rec(d + 1, left);
    for (int c = 0; c < l; ++c)
      if (left[c] > 0) {
        choice[d] = c;
        --left[c];
        rec(d + 1, left);
        ++left[c];
      }
  };
  rec(0, N);
  return w.to_centre(total);
}

std::vector<ExponentVector> upto(int d, int l) {
  std::vector<ExponentVector> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& N : exponent_vectors_of(k, l)) out.push_back(N);
  return out;
}

}  // namespace

TEST_SUITE("rgamma") {
  TEST_CASE("trivial group is the ring of binomial polynomials") {
    GroupData g = builtin_group("trivial");
    CHECK(rg_basis_product(g, {1}, {1}) == RGammaElement::basis({2}, 2) + RGammaElement::basis({1}));
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        RGammaElement prod = rg_basis_product(g, {a}, {b});
        for (long long t = 0; t <= 8; ++t) {
          BigInt v = 0;
          for (const auto& [N, c] : prod.terms()) v += c * binomial(BigInt(t), N[0]);
          CHECK(v == binomial(BigInt(t), a) * binomial(BigInt(t), b));
        }
      }
    auto omega = omega_expand(g, 3);
    // C(T, 3) = T(T-1)(T-2)/6.
    TPolynomial T = TPolynomial::variable(0, 1);
    TPolynomial want = T * (T - TPolynomial::constant(1, 1)) * (T - TPolynomial::constant(2, 1));
    CHECK(omega.at({3}) == want.scaled(Rational(1, 6)));
  }

  TEST_CASE("b_N from the tensor definition") {
    for (const char* name : {"C2", "S3"}) {
      Wreath w(builtin_group(name));
      for (int n = 0; n <= 3; ++n)
        for (const auto& N : upto(n + 1, w.class_count())) CHECK(ev_r(N, n) == b_from_tensor(w, N, n));
    }
    Wreath c2(builtin_group("C2"));
    CHECK(to_string(ev_r({0, 1}, 2), false) == "X'[(1)@0;(1)@1]");
    CHECK(ev_r({1, 2}, 2).is_zero());
  }

  TEST_CASE("ring laws") {
    GroupData g = builtin_group("S3");
    auto basis = upto(2, 3);
    CHECK(rg_basis_product(g, {0, 0, 0}, {1, 2, 0}) == RGammaElement::basis({1, 2, 0}));
    for (int i = 0; i < 60; ++i) {
      const auto& a = basis[test::uniform(0, static_cast<int>(basis.size()) - 1)];
      const auto& b = basis[test::uniform(0, static_cast<int>(basis.size()) - 1)];
      const auto& c = basis[test::uniform(0, static_cast<int>(basis.size()) - 1)];
      CHECK(rg_basis_product(g, a, b) == rg_basis_product(g, b, a));
      CHECK(rg_multiply(rg_basis_product(g, a, b), RGammaElement::basis(c), g) ==
            rg_multiply(RGammaElement::basis(a), rg_basis_product(g, b, c), g));
    }
  }

  TEST_CASE("free over the identity-class binomials") {
    // B_N = C(T(1), N(1)) B_M + lower, M = N with the identity entry cleared.
    GroupData g = builtin_group("C2");
    auto omega = omega_expand(g, 4);
    for (const auto& N : upto(4, 2)) {
      ExponentVector M = N;
      M[0] = 0;
      TPolynomial T = TPolynomial::variable(0, 2), lead = TPolynomial::constant(1, 2);
      for (int k = 0; k < N[0]; ++k) lead = lead * (T - TPolynomial::constant(k, 2)).scaled(Rational(1, k + 1));
      TPolynomial diff = omega.at(N) - lead * omega.at(M);
      CHECK(diff.total_degree() < total_degree(N));
    }
  }

  TEST_CASE("B_{q,r} examples") {
    CHECK(b_qr_mod_p({0, 0}, 1, 2).is_zero());
    CHECK(b_qr_mod_p({1, 1}, 0, 2) == RGammaElement::basis({1, 0}) + RGammaElement::basis({0, 1}));
    CHECK(b_qr_mod_p({0, 1}, 1, 3) == RGammaElement::basis({0, 3}));
  }

  TEST_CASE("modular homomorphism values") {
    GroupData g = builtin_group("trivial");
    CHECK(modular_hom(g, 2, {{0, 0, 0}}, ExponentVector{0}) == 1);
    CHECK(modular_hom(g, 2, {{0, 0, 0}}, ExponentVector{2}) == 0);
    // t = 1 + 2*3 + 0*9 = 7, C(7,3) = 35 = 2 mod 3.
    CHECK(modular_hom(g, 3, {{1, 2, 0}}, ExponentVector{3}) == 2);
    try {
      modular_hom(g, 2, {{1}}, ExponentVector{4});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Precision);
    }
    GroupData c2 = builtin_group("C2");
    // One 2-block: T(1) -> t, T(g) -> t, so B[1,1] -> C(t,1)C(t,1) coefficient of x y.
    for (int t = 0; t < 8; ++t) {
      std::vector<int> digits{t % 2, (t / 2) % 2, t / 4, 0};
      BigInt want = 0;
      // Coefficient of x_1 x_g in (1 + x_1 + x_g)^t.
      want = BigInt(t) * (t - 1);
      CHECK(modular_hom(c2, 2, {digits}, ExponentVector{1, 1}) == mod_p(want, 2));
    }
  }
}
