#pragma once

#include "wfh/core.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace wfh {

// Sum_k a_k C(t,k). Trailing zero coefficients are never stored.
class IntValuedPoly {
 public:
  IntValuedPoly() = default;
  explicit IntValuedPoly(std::vector<BigInt> coeffs);
  static IntValuedPoly constant(const BigInt& c);
  static IntValuedPoly binomial_basis(int k);  // C(t,k)
  // C(t - a, k), expressed in the C(t,j) basis.
  static IntValuedPoly shifted_binomial(long long a, int k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt evaluate(long long n) const;
  // p(t + a).
  IntValuedPoly shifted(long long a) const;

  IntValuedPoly operator+(const IntValuedPoly& o) const;
  IntValuedPoly operator-(const IntValuedPoly& o) const;
  IntValuedPoly operator-() const;
  IntValuedPoly operator*(const IntValuedPoly& o) const;
  IntValuedPoly operator*(const BigInt& c) const;
  IntValuedPoly& operator+=(const IntValuedPoly& o) { return *this = *this + o; }
  IntValuedPoly& operator-=(const IntValuedPoly& o) { return *this = *this - o; }
  friend bool operator==(const IntValuedPoly&, const IntValuedPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

BigInt ivp_evaluate(const IntValuedPoly& p, long long n);
IntValuedPoly ivp_from_values(long long n0, const std::vector<BigInt>& values);

// Queries oracle at n0, n0+1, ... until the forward differences of some order
// d+1 <= cap+1 vanish at three consecutive positions and two further values
// agree with the fitted polynomial.
IntValuedPoly interpolate_stable(const std::function<BigInt(long long)>& oracle, long long n0, int cap);

// "a0 + a1*C(t,1) + ..."; "0" for the zero polynomial.
std::string to_string(const IntValuedPoly& p);
IntValuedPoly parse_intpoly(std::string_view text);

}  // namespace wfh
