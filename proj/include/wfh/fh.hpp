#pragma once

#include "wfh/intpoly.hpp"
#include "wfh/lambda.hpp"
#include "wfh/rgamma.hpp"
#include "wfh/wreath.hpp"

#include <map>
#include <mutex>
#include <string>

namespace wfh {

// Sum of p_ν(t) K_ν over partially-reduced class labels ν.
class FHElement {
 public:
  FHElement() = default;
  static FHElement basis(const Multipartition& nu, const IntValuedPoly& p = IntValuedPoly::constant(1));
  static FHElement one() { return basis(Multipartition()); }

  const std::map<Multipartition, IntValuedPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  IntValuedPoly coefficient(const Multipartition& nu) const;
  void add(const Multipartition& nu, const IntValuedPoly& p);
  FHElement& operator+=(const FHElement& o);
  FHElement& operator-=(const FHElement& o);
  FHElement scaled(const IntValuedPoly& p) const;
  friend bool operator==(const FHElement&, const FHElement&) = default;

 private:
  std::map<Multipartition, IntValuedPoly> terms_;
};

// Element of R_Γ ⊗ Λ(Γ*): m-basis key -> R_Γ coefficient.
class TensorElement {
 public:
  TensorElement() = default;
  const std::map<Multipartition, RGammaElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RGammaElement coefficient(const Multipartition& lambda) const;
  void add(const Multipartition& lambda, const RGammaElement& a);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::map<Multipartition, RGammaElement> terms_;
};

// Filtration degrees of a partially-reduced label.
int transposition_degree(const Multipartition& nu);
int moving_degree(const Multipartition& nu);
int coloured_fixed_points(const Multipartition& nu);

// Λ(Γ*) key -> class label of its leading term.
Multipartition leading_label(const Multipartition& lambda);

class FHAlgebra {
 public:
  explicit FHAlgebra(GroupData g);
  FHAlgebra(const FHAlgebra&) = delete;
  FHAlgebra& operator=(const FHAlgebra&) = delete;

  const GroupData& group() const { return wreath_.group(); }
  const Wreath& wreath() const { return wreath_; }

  IntValuedPoly structure_poly(const Multipartition& mu, const Multipartition& nu, const Multipartition& lambda) const;
  FHElement product_of_basis(const Multipartition& mu, const Multipartition& nu) const;
  FHElement multiply(const FHElement& a, const FHElement& b) const;
  CentreElement specialize(const FHElement& a, int n) const;

  FHElement psi_r(const ExponentVector& N) const;
  FHElement psi_r(const RGammaElement& a) const;
  FHElement psi_m(const Multipartition& lambda) const;
  FHElement psi(const TensorElement& x) const;
  TensorElement char_sym_fn(const Multipartition& mu) const;

 private:
  void check_label(const Multipartition& nu) const;

  Wreath wreath_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<Multipartition, Multipartition, Multipartition>, IntValuedPoly> structure_;
  mutable std::map<std::pair<Multipartition, Multipartition>, FHElement> products_;
  mutable std::map<Multipartition, FHElement> psi_m_;
  mutable std::map<Multipartition, TensorElement> char_sym_;
};

// "p(t)*K(2,1) + ..." with the intpoly text form for coefficients.
std::string to_string(const FHElement& a, bool short_form);
// "(B[..] + ...)*m[...] + ..."
std::string to_string(const TensorElement& x, bool short_form);
// Trivial Γ only: coefficients of C(t,k)·e_lambda, keyed (lambda, k).
std::map<std::pair<Partition, int>, BigInt> elementary_terms(const TensorElement& x);
// Trivial Γ only: "e1^2 - 2*e2 - C(t,2)".
std::string to_string_elementary(const TensorElement& x);

}  // namespace wfh
