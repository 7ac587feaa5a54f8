#pragma once

#include "wfh/groupdata.hpp"
#include "wfh/partitions.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wfh {

// Element of Λ(Γ*) in the monomial basis m_λ, λ indexed by classes of Γ.
class WeightedSymFn {
 public:
  WeightedSymFn() = default;
  static WeightedSymFn basis(const Multipartition& lambda, const BigInt& c = 1);
  static WeightedSymFn one() { return basis(Multipartition()); }

  const std::map<Multipartition, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Multipartition& lambda) const;
  void add(const Multipartition& lambda, const BigInt& c);
  WeightedSymFn& operator+=(const WeightedSymFn& o);
  WeightedSymFn& operator-=(const WeightedSymFn& o);
  friend WeightedSymFn operator+(WeightedSymFn a, const WeightedSymFn& b) { return a += b; }
  WeightedSymFn scaled(const BigInt& c) const;
  friend bool operator==(const WeightedSymFn&, const WeightedSymFn&) = default;

 private:
  std::map<Multipartition, BigInt> terms_;
};

using TensorPairSum = std::map<std::pair<Multipartition, Multipartition>, BigInt>;

WeightedSymFn wsf_basis_product(const Multipartition& lambda, const Multipartition& mu, const GroupData& g);
WeightedSymFn wsf_multiply(const WeightedSymFn& f, const WeightedSymFn& h, const GroupData& g);

TensorPairSum coproduct(const Multipartition& lambda);
TensorPairSum coproduct(const WeightedSymFn& f);
BigInt counit(const WeightedSymFn& f);
WeightedSymFn antipode(const Multipartition& lambda, const GroupData& g);
WeightedSymFn antipode(const WeightedSymFn& f, const GroupData& g);
// (x ⊗ y)(x' ⊗ y') = xx' ⊗ yy'.
TensorPairSum tensor_multiply(const TensorPairSum& a, const TensorPairSum& b, const GroupData& g);

struct Indecomposables {
  int basis_size = 0;
  int free_rank = 0;
  std::vector<BigInt> invariant_factors;  // nonzero Smith diagonal, divisibility chain
  std::vector<BigInt> torsion;            // the factors above 1
};

// Nonzero diagonal of the Smith normal form, each entry positive.
std::vector<BigInt> smith_invariant_factors(std::vector<std::vector<BigInt>> matrix);
Indecomposables indecomposables(const GroupData& g, int d);

// Trivial Γ: rewrite a homogeneous element in the elementary basis,
// keyed by the partition of e-indices.
std::map<Partition, BigInt> to_elementary_basis(const WeightedSymFn& f);

std::string to_string(const WeightedSymFn& f, bool short_form);

}  // namespace wfh
