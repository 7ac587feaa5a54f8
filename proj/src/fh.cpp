#include "wfh/fh.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace wfh {

FHElement FHElement::basis(const Multipartition& nu, const IntValuedPoly& p) {
  FHElement a;
  a.add(nu, p);
  return a;
}

IntValuedPoly FHElement::coefficient(const Multipartition& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? IntValuedPoly() : it->second;
}

void FHElement::add(const Multipartition& nu, const IntValuedPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(nu, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FHElement& FHElement::operator+=(const FHElement& o) {
  for (const auto& [k, p] : o.terms_) add(k, p);
  return *this;
}

FHElement& FHElement::operator-=(const FHElement& o) {
  for (const auto& [k, p] : o.terms_) add(k, -p);
  return *this;
}

FHElement FHElement::scaled(const IntValuedPoly& p) const {
  FHElement out;
  for (const auto& [k, q] : terms_) out.add(k, q * p);
  return out;
}

RGammaElement TensorElement::coefficient(const Multipartition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? RGammaElement() : it->second;
}

void TensorElement::add(const Multipartition& lambda, const RGammaElement& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int transposition_degree(const Multipartition& nu) {
  int d = 0;
  for (const auto& [c, p] : nu.components())
    for (int r : p.parts()) d += c == 0 ? r : r - 1;
  return d;
}

int moving_degree(const Multipartition& nu) {
  int d = 0;
  for (const auto& [c, p] : nu.components())
    for (int r : p.parts()) d += c == 0 ? r + 1 : (r >= 2 ? r : 0);
  return d;
}

int coloured_fixed_points(const Multipartition& nu) {
  int k = 0;
  for (const auto& [c, p] : nu.components())
    if (c != 0) k += p.multiplicity(1);
  return k;
}

Multipartition leading_label(const Multipartition& lambda) { return hat(lambda); }

namespace {

auto filtration_key(const Multipartition& nu) {
  return std::make_tuple(transposition_degree(nu), moving_degree(nu), nu.affected());
}

// Upper bound on the degree of the K_nu coefficient of psi_m(lambda): a free
// point of a contributing word is touched at least twice, and a word touches
// at most |lambda| + l(lambda) points.
int psi_m_degree_bound(const Multipartition& lambda, const Multipartition& nu) {
  int touched = lambda.size() + lambda.length() - nu.affected();
  int twice = (2 * lambda.size() - moving_degree(nu)) / 2 - coloured_fixed_points(nu);
  return std::min(touched, twice);
}

}  // namespace

FHAlgebra::FHAlgebra(GroupData g) : wreath_(std::move(g)) {}

void FHAlgebra::check_label(const Multipartition& nu) const {
  for (const auto& [c, p] : nu.components())
    if (c < 0 || c >= wreath_.class_count())
      fail(ErrorCode::InvalidParameter, "class index " + std::to_string(c) + " out of range");
}

IntValuedPoly FHAlgebra::structure_poly(const Multipartition& mu, const Multipartition& nu,
                                        const Multipartition& lambda) const {
  check_label(mu);
  check_label(nu);
  check_label(lambda);
  auto key = std::make_tuple(mu, nu, lambda);
  {
    std::lock_guard lock(mu_);
    auto it = structure_.find(key);
    if (it != structure_.end()) return it->second;
  }
  const int excess = mu.affected() + nu.affected() - lambda.affected();
  IntValuedPoly result;
  if (excess >= 0 && transposition_degree(lambda) <= transposition_degree(mu) + transposition_degree(nu)) {
    auto oracle = [&](long long n) -> BigInt {
      auto um = unreduce_partial(mu, static_cast<int>(n));
      auto un = unreduce_partial(nu, static_cast<int>(n));
      auto ul = unreduce_partial(lambda, static_cast<int>(n));
      if (!um || !un || !ul) return 0;
      return wreath_.centre_product(*um, *un, static_cast<int>(n)).coefficient(*ul);
    };
    result = interpolate_stable(oracle, lambda.affected(), excess / 2);
  }
  std::lock_guard lock(mu_);
  structure_.emplace(key, result);
  return result;
}

FHElement FHAlgebra::product_of_basis(const Multipartition& mu, const Multipartition& nu) const {
  check_label(mu);
  check_label(nu);
  const auto& [a, b] = mu <= nu ? std::tie(mu, nu) : std::tie(nu, mu);
  auto key = std::make_pair(a, b);
  {
    std::lock_guard lock(mu_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  FHElement out;
  if (a.empty()) {
    out = FHElement::basis(b);
  } else if (b.empty()) {
    out = FHElement::basis(a);
  } else {
    // A nonzero coefficient of degree at most (excess / 2) cannot vanish on
    // the whole window below, so every label in the support is seen there.
    std::set<Multipartition> support;
    const int hi = a.affected() + b.affected();
    for (int n = std::max(a.affected(), b.affected()); n <= hi; ++n) {
      auto z = wreath_.centre_product(*unreduce_partial(a, n), *unreduce_partial(b, n), n);
      for (const auto& [type, c] : z.terms()) support.insert(partially_reduce(type));
    }
    for (const auto& lambda : support) out.add(lambda, structure_poly(a, b, lambda));
  }
  std::lock_guard lock(mu_);
  products_.emplace(key, out);
  return out;
}

FHElement FHAlgebra::multiply(const FHElement& a, const FHElement& b) const {
  FHElement out;
  for (const auto& [mu, p] : a.terms())
    for (const auto& [nu, q] : b.terms()) out += product_of_basis(mu, nu).scaled(p * q);
  return out;
}

CentreElement FHAlgebra::specialize(const FHElement& a, int n) const {
  if (n < 0) fail(ErrorCode::InvalidParameter, "n must be non-negative");
  CentreElement z(n);
  for (const auto& [nu, p] : a.terms()) {
    check_label(nu);
    if (auto u = unreduce_partial(nu, n)) z.add(*u, p.evaluate(n));
  }
  return z;
}

FHElement FHAlgebra::psi_r(const ExponentVector& N) const {
  const int l = wreath_.class_count();
  if (static_cast<int>(N.size()) != l) fail(ErrorCode::InvalidParameter, "exponent vector has wrong length");
  std::map<int, Partition> comps;
  int coloured = 0;
  for (int c = 1; c < l; ++c) {
    if (N[c] < 0) fail(ErrorCode::InvalidParameter, "negative exponent");
    if (N[c] > 0) comps.emplace(c, Partition(std::vector<int>(N[c], 1)));
    coloured += N[c];
  }
  if (N[0] < 0) fail(ErrorCode::InvalidParameter, "negative exponent");
  return FHElement::basis(Multipartition(std::move(comps)), IntValuedPoly::shifted_binomial(coloured, N[0]));
}

FHElement FHAlgebra::psi_r(const RGammaElement& a) const {
  FHElement out;
  for (const auto& [N, c] : a.terms()) out += psi_r(N).scaled(IntValuedPoly::constant(c));
  return out;
}

FHElement FHAlgebra::psi_m(const Multipartition& lambda) const {
  check_label(lambda);
  {
    std::lock_guard lock(mu_);
    auto it = psi_m_.find(lambda);
    if (it != psi_m_.end()) return it->second;
  }
  const int top = lambda.size() + lambda.length();
  std::vector<std::map<Multipartition, BigInt>> values(top + 1);
  std::set<Multipartition> support;
  for (int n = 0; n <= top; ++n) {
    CentreElement z = wreath_.evaluate_weighted_monomial_central(lambda, n);
    for (const auto& [type, c] : z.terms()) {
      values[n][partially_reduce(type)] = c;
      support.insert(partially_reduce(type));
    }
  }
  FHElement out;
  for (const auto& nu : support) {
    const int n0 = nu.affected();
    const int bound = psi_m_degree_bound(lambda, nu);
    std::vector<BigInt> seq;
    for (int n = n0; n <= top; ++n) {
      auto it = values[n].find(nu);
      seq.push_back(it == values[n].end() ? BigInt(0) : it->second);
    }
    if (bound < 0) fail(ErrorCode::Validation, "monomial image outside the degree bound at " + to_string(nu));
    IntValuedPoly p = ivp_from_values(n0, std::vector<BigInt>(seq.begin(), seq.begin() + bound + 1));
    for (std::size_t i = bound + 1; i < seq.size(); ++i)
      if (p.evaluate(n0 + static_cast<long long>(i)) != seq[i])
        fail(ErrorCode::Validation, "monomial image exceeds the degree bound at " + to_string(nu));
    out.add(nu, p);
  }
  // One point past the sampling window as an independent check.
  if (!lambda.empty() && top + 1 <= kMaxDegree &&
      specialize(out, top + 1) != wreath_.evaluate_weighted_monomial_central(lambda, top + 1))
    fail(ErrorCode::Validation, "interpolated monomial image disagrees at n = " + std::to_string(top + 1));
  std::lock_guard lock(mu_);
  psi_m_.emplace(lambda, out);
  return out;
}

FHElement FHAlgebra::psi(const TensorElement& x) const {
  FHElement out;
  for (const auto& [lambda, a] : x.terms()) out += multiply(psi_r(a), psi_m(lambda));
  return out;
}

TensorElement FHAlgebra::char_sym_fn(const Multipartition& mu) const {
  check_label(mu);
  {
    std::lock_guard lock(mu_);
    auto it = char_sym_.find(mu);
    if (it != char_sym_.end()) return it->second;
  }
  const int l = wreath_.class_count();
  TensorElement out;
  FHElement residual = FHElement::basis(mu);
  while (!residual.is_zero()) {
    auto top = std::max_element(residual.terms().begin(), residual.terms().end(), [](const auto& x, const auto& y) {
      return std::make_pair(filtration_key(x.first), x.first) < std::make_pair(filtration_key(y.first), y.first);
    });
    const Multipartition nu = top->first;
    const IntValuedPoly p = top->second;
    // nu = hat(lambda) with coloured fixed points 1^M adjoined.
    Multipartition lambda = reduce_partial_label(nu);
    ExponentVector M(l, 0);
    std::map<int, Partition> fixed;
    for (const auto& [c, part] : nu.components())
      if (c != 0 && part.multiplicity(1) > 0) {
        M[c] = part.multiplicity(1);
        fixed.emplace(c, Partition(std::vector<int>(M[c], 1)));
      }
    const int coloured = total_degree(M);
    IntValuedPoly q = p.shifted(coloured);
    RGammaElement coeff;
    for (int k = 0; k <= q.degree(); ++k) {
      ExponentVector N = M;
      N[0] = k;
      coeff.add(N, q.coeffs()[k]);
    }
    out.add(lambda, coeff);
    FHElement image = multiply(FHElement::basis(Multipartition(std::move(fixed))), psi_m(lambda));
    residual -= image.scaled(p);
    if (residual.terms().count(nu))
      fail(ErrorCode::Validation, "triangular solve did not clear " + to_string(nu));
  }
  std::lock_guard lock(mu_);
  char_sym_.emplace(mu, out);
  return out;
}

namespace {

// Joins (negative, text) pairs as "a - b + c".
std::string join_signed(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, text] = terms[i];
    s += i == 0 ? (negative ? "-" : "") : (negative ? " - " : " + ");
    s += text;
  }
  return s;
}

// Scalar times basis label, or a parenthesised sum times the label.
std::pair<bool, std::string> scaled_label(const std::vector<std::pair<BigInt, std::string>>& coeff,
                                          const std::string& full, const std::string& label) {
  if (coeff.size() != 1) return {false, "(" + full + ")" + (label.empty() ? "" : "*" + label)};
  const auto& [c, factor] = coeff.front();
  BigInt mag = c < 0 ? BigInt(-c) : c;
  std::vector<std::string> parts;
  if (mag != 1 || (factor.empty() && label.empty())) parts.push_back(mag.str());
  if (!factor.empty()) parts.push_back(factor);
  if (!label.empty()) parts.push_back(label);
  std::string text;
  for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? "*" : "") + parts[i];
  return {c < 0, text};
}

}  // namespace

std::string to_string(const FHElement& a, bool short_form) {
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [nu, p] : a.terms()) {
    std::vector<std::pair<BigInt, std::string>> coeff;
    for (int k = 0; k <= p.degree(); ++k)
      if (p.coeffs()[k] != 0) coeff.emplace_back(p.coeffs()[k], k ? "C(t," + std::to_string(k) + ")" : "");
    terms.push_back(scaled_label(coeff, to_string(p), "K" + to_string(nu, short_form)));
  }
  return join_signed(terms);
}

std::string to_string(const TensorElement& x, bool short_form) {
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [lambda, a] : x.terms()) {
    std::vector<std::pair<BigInt, std::string>> coeff;
    for (const auto& [N, c] : a.terms()) coeff.emplace_back(c, total_degree(N) ? to_string_b(N) : "");
    terms.push_back(scaled_label(coeff, to_string(a), lambda.empty() ? "" : "m" + to_string(lambda, short_form)));
  }
  return join_signed(terms);
}

std::map<std::pair<Partition, int>, BigInt> elementary_terms(const TensorElement& x) {
  std::map<int, WeightedSymFn> by_binomial;
  for (const auto& [lambda, a] : x.terms())
    for (const auto& [N, c] : a.terms()) {
      if (N.size() != 1) fail(ErrorCode::InvalidParameter, "elementary form needs trivial Γ");
      by_binomial[N[0]].add(lambda, c);
    }
  std::map<std::pair<Partition, int>, BigInt> out;
  for (const auto& [k, f] : by_binomial)
    for (const auto& [e, c] : to_elementary_basis(f)) out[{e, k}] = c;
  return out;
}

std::string to_string_elementary(const TensorElement& x) {
  struct Term {
    Partition e;
    int k;
    BigInt c;
  };
  std::vector<Term> terms;
  for (const auto& [key, c] : elementary_terms(x)) terms.push_back({key.first, key.second, c});
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.e.size() != b.e.size()) return a.e.size() > b.e.size();
    if (a.e != b.e) return a.e < b.e;
    return a.k < b.k;
  });
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    BigInt mag = t.c < 0 ? BigInt(-t.c) : t.c;
    s += i == 0 ? (t.c < 0 ? "-" : "") : (t.c < 0 ? " - " : " + ");
    std::vector<std::string> factors;
    if (mag != 1) factors.push_back(mag.str());
    if (t.k > 0) factors.push_back("C(t," + std::to_string(t.k) + ")");
    for (std::size_t j = 0; j < t.e.parts().size();) {
      int part = t.e[j];
      int mult = t.e.multiplicity(part);
      factors.push_back("e" + std::to_string(part) + (mult > 1 ? "^" + std::to_string(mult) : ""));
      j += mult;
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t j = 0; j < factors.size(); ++j) s += (j ? "*" : "") + factors[j];
  }
  return s;
}

}  // namespace wfh
