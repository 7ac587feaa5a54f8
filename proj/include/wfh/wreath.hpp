#pragma once

#include "wfh/groupdata.hpp"
#include "wfh/partitions.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace wfh {

constexpr int kMaxDegree = 16;

// (g, sigma) in Γ≀S_n with perm[i] = sigma(i), 0-based. Slots at or beyond n
// hold the identity, so an element of Γ≀S_m is also an element of Γ≀S_n, n >= m.
struct WreathElement {
  std::array<std::uint8_t, kMaxDegree> perm;
  std::array<std::uint8_t, kMaxDegree> color;
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
};

struct WreathElementHash {
  std::size_t operator()(const WreathElement& e) const noexcept;
};

WreathElement identity_element();
// colors[i] is an element index of Γ, perm is one-line and 0-based.
WreathElement make_element(const std::vector<int>& colors, const std::vector<int>& perm);

// Sorted list of (cycle length, class) pairs; a hashable cycle type.
struct TypeKey {
  std::array<std::uint16_t, kMaxDegree> entries{};
  std::uint8_t count = 0;
  friend bool operator==(const TypeKey&, const TypeKey&) = default;
};

struct TypeKeyHash {
  std::size_t operator()(const TypeKey& k) const noexcept;
};

class AlgebraElement {
 public:
  using Map = std::unordered_map<WreathElement, BigInt, WreathElementHash>;

  explicit AlgebraElement(int n = 0) : n_(n) {}
  int degree() const { return n_; }
  const Map& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const WreathElement& e) const;
  void add(const WreathElement& e, const BigInt& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement scaled(const BigInt& c) const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

 private:
  int n_;
  Map terms_;
};

// Element of the centre of Z[Γ≀S_n] in the class-sum basis, keyed by
// unreduced cycle type.
class CentreElement {
 public:
  explicit CentreElement(int n = 0) : n_(n) {}
  int degree() const { return n_; }
  const std::map<Multipartition, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const Multipartition& m) const;
  void add(const Multipartition& m, const BigInt& c);
  CentreElement& operator+=(const CentreElement& o);
  CentreElement scaled(const BigInt& c) const;
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const CentreElement& a, const CentreElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  std::map<Multipartition, BigInt> terms_;
};

class Wreath {
 public:
  explicit Wreath(GroupData g);
  Wreath(const Wreath&) = delete;
  Wreath& operator=(const Wreath&) = delete;

  const GroupData& group() const { return g_; }
  int class_count() const { return g_.class_count(); }

  WreathElement multiply(const WreathElement& a, const WreathElement& b) const;
  WreathElement inverse(const WreathElement& a) const;
  TypeKey type_key(const WreathElement& a, int n) const;
  Multipartition cycle_type(const WreathElement& a, int n) const;
  static TypeKey to_key(const Multipartition& type);
  static Multipartition from_key(const TypeKey& key);

  BigInt class_size(const Multipartition& type, int n) const;
  WreathElement representative(const Multipartition& type, int n) const;
  // Visits each element of the class once; guarded by max_enumeration().
  void for_each_in_class(const Multipartition& type, int n,
                         const std::function<void(const WreathElement&)>& fn) const;
  // Visits all of Γ≀S_n; guarded by |Γ|^n n! <= max_enumeration().
  void for_each_element(int n, const std::function<void(const WreathElement&)>& fn) const;

  AlgebraElement class_sum(const Multipartition& type, int n) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  CentreElement centre_product(const Multipartition& mu, const Multipartition& nu, int n) const;
  CentreElement centre_multiply(const CentreElement& a, const CentreElement& b) const;

  // L_j(c), 1 <= j <= n.
  AlgebraElement jm_element(int j, int c, int n) const;
  // Linear extension: sum_c coeffs[c] L_j(c).
  AlgebraElement jm_element(int j, const std::vector<BigInt>& coeffs, int n) const;
  // c^{(d)}: class sum of c placed in slot d (1-based).
  AlgebraElement slot_class(int d, int c, int n) const;

  // Direct expansion of ev_n(m_lambda); checked to be central.
  AlgebraElement evaluate_weighted_monomial(const Multipartition& lambda, int n) const;
  // Same value computed class by class through a recursion on n.
  CentreElement evaluate_weighted_monomial_central(const Multipartition& lambda, int n) const;

  CentreElement to_centre(const AlgebraElement& a) const;
  AlgebraElement from_centre(const CentreElement& z) const;

 private:
  using Letter = std::pair<int, int>;  // (exponent r, class c)
  using LetterBag = std::map<Letter, int>;
  struct Lookup {
    std::unordered_map<TypeKey, BigInt, TypeKeyHash> by_key;
  };
  struct SlotFactor {
    std::vector<std::pair<WreathElement, BigInt>> inverse_terms;
  };

  const AlgebraElement& jm_power(int d, int r) const;
  const SlotFactor& slot_factor(int d, const Letter& letter) const;
  const std::vector<Multipartition>& candidate_labels(int max_affected) const;
  std::shared_ptr<const Lookup> monomial_lookup(const LetterBag& bag, int n) const;
  void check_degree(int n) const;

  GroupData g_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<AlgebraElement>> jm_powers_;
  mutable std::map<std::pair<int, Letter>, std::unique_ptr<SlotFactor>> slot_factors_;
  mutable std::map<int, std::unique_ptr<std::vector<Multipartition>>> candidates_;
  mutable std::map<std::pair<LetterBag, int>, std::shared_ptr<const Lookup>> monomials_;
  mutable std::map<std::tuple<Multipartition, Multipartition, int>, CentreElement> products_;
};

std::string to_string(const CentreElement& z, bool short_form);

}  // namespace wfh
