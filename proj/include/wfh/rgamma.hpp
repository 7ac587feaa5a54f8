#pragma once

#include "wfh/groupdata.hpp"
#include "wfh/wreath.hpp"

#include <map>
#include <string>
#include <vector>

namespace wfh {

// N: one non-negative entry per class of Γ, class 0 = identity.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& N);
std::vector<ExponentVector> exponent_vectors_of(int degree, int l);
std::string to_string_b(const ExponentVector& N);  // "B[n0,n1,...]"

// Finite Z-combination of the basis B_N.
class RGammaElement {
 public:
  RGammaElement() = default;
  static RGammaElement basis(const ExponentVector& N, const BigInt& c = 1);
  static RGammaElement one(int l);

  const std::map<ExponentVector, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const ExponentVector& N) const;
  void add(const ExponentVector& N, const BigInt& c);
  RGammaElement& operator+=(const RGammaElement& o);
  RGammaElement& operator-=(const RGammaElement& o);
  friend RGammaElement operator+(RGammaElement a, const RGammaElement& b) { return a += b; }
  RGammaElement scaled(const BigInt& c) const;
  RGammaElement reduced_mod(std::int64_t p) const;
  friend bool operator==(const RGammaElement&, const RGammaElement&) = default;

 private:
  std::map<ExponentVector, BigInt> terms_;
};

std::string to_string(const RGammaElement& a);

// Polynomial in commuting variables T(c) with rational coefficients.
class TPolynomial {
 public:
  TPolynomial() = default;
  static TPolynomial constant(const Rational& c, int l);
  static TPolynomial variable(int c, int l);

  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  void add(const std::vector<int>& exps, const Rational& c);
  TPolynomial operator+(const TPolynomial& o) const;
  TPolynomial operator-(const TPolynomial& o) const;
  TPolynomial operator*(const TPolynomial& o) const;
  TPolynomial scaled(const Rational& c) const;
  int total_degree() const;  // -1 for zero
  TPolynomial top_part() const;
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

 private:
  std::map<std::vector<int>, Rational> terms_;
};

// Coefficients B_N of exp(T(log(1 + sum_c c x_c))) for |N| <= D.
std::map<ExponentVector, TPolynomial> omega_expand(const GroupData& g, int D);

// Structure constants from z_i = x_i + y_i + sum A^i_{jk} x_j y_k (cached).
RGammaElement rg_basis_product(const GroupData& g, const ExponentVector& N, const ExponentVector& M);
RGammaElement rg_multiply(const RGammaElement& a, const RGammaElement& b, const GroupData& g);

// b_N in the centre of Z[Γ≀S_n].
CentreElement ev_r(const ExponentVector& N, int n);
CentreElement ev_r(const RGammaElement& a, int n);

// Coefficient of x^N in prod_u (1 + sum_c w[u][c] x_c)^{e[u]}.
Rational weighted_binomial_coefficient(const ExponentVector& N, const std::vector<std::vector<Rational>>& w,
                                       const std::vector<long long>& e);

// q^p in the class algebra over F_p.
std::vector<std::int64_t> class_power_mod_p(const GroupData& g, const std::vector<std::int64_t>& q, int p);
RGammaElement b_qr_mod_p(const std::vector<std::int64_t>& q, int r, int p);
RGammaElement rg_power_mod_p(const RGammaElement& a, int k, int p, const GroupData& g);

// digits[u] are the base-p digits (least significant first) of t_u, one
// sequence per p-block of Γ in p_blocks order.
std::int64_t modular_hom(const GroupData& g, int p, const std::vector<std::vector<int>>& digits,
                         const ExponentVector& N);
std::int64_t modular_hom(const GroupData& g, int p, const std::vector<std::vector<int>>& digits,
                         const RGammaElement& a);

}  // namespace wfh
