#include "wfh/lambda.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>

namespace wfh {

WeightedSymFn WeightedSymFn::basis(const Multipartition& lambda, const BigInt& c) {
  WeightedSymFn f;
  f.add(lambda, c);
  return f;
}

BigInt WeightedSymFn::coefficient(const Multipartition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void WeightedSymFn::add(const Multipartition& lambda, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeightedSymFn& WeightedSymFn::operator+=(const WeightedSymFn& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

WeightedSymFn& WeightedSymFn::operator-=(const WeightedSymFn& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

WeightedSymFn WeightedSymFn::scaled(const BigInt& c) const {
  WeightedSymFn out;
  for (const auto& [k, x] : terms_) out.add(k, x * c);
  return out;
}

namespace {

using Letter = std::pair<int, int>;  // (degree r, class c)

std::vector<std::int64_t> fingerprint(const GroupData& g) {
  const int l = g.class_count();
  std::vector<std::int64_t> fp{l};
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k) fp.push_back(g.a_coeff(i, j, k));
  return fp;
}

std::map<Letter, int> letter_bag(const Multipartition& lambda) {
  std::map<Letter, int> bag;
  for (const auto& [c, p] : lambda.components())
    for (int r : p.parts()) ++bag[{r, c}];
  return bag;
}

std::vector<Letter> letter_list(const Multipartition& lambda) {
  std::vector<Letter> out;
  for (const auto& [letter, count] : letter_bag(lambda))
    for (int i = 0; i < count; ++i) out.push_back(letter);
  return out;
}

// Order of the stabiliser in S_n of a monomial of the given type.
BigInt stabiliser(const std::map<Letter, int>& bag, int n) {
  int used = 0;
  BigInt s = 1;
  for (const auto& [letter, count] : bag) {
    used += count;
    s *= factorial(count);
  }
  return s * factorial(n - used);
}

Multipartition type_of(const std::vector<Letter>& slots) {
  std::map<int, std::vector<int>> parts;
  for (const auto& [r, c] : slots)
    if (r > 0) parts[c].push_back(r);
  std::map<int, Partition> comps;
  for (auto& [c, v] : parts) comps.emplace(c, Partition::from_unsorted(std::move(v)));
  return Multipartition(std::move(comps));
}

}  // namespace

WeightedSymFn wsf_basis_product(const Multipartition& lambda, const Multipartition& mu, const GroupData& g) {
  static std::mutex cache_mu;
  static std::map<std::tuple<std::vector<std::int64_t>, Multipartition, Multipartition>, WeightedSymFn> cache;
  // Fix one monomial of the longer factor; the orbit of the other is summed.
  const Multipartition& fixed = lambda.length() >= mu.length() ? lambda : mu;
  const Multipartition& moving = lambda.length() >= mu.length() ? mu : lambda;
  auto key = std::make_tuple(fingerprint(g), fixed, moving);
  {
    std::lock_guard lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  for (const auto* m : {&lambda, &mu})
    for (const auto& [c, p] : m->components())
      if (c >= g.class_count()) fail(ErrorCode::InvalidParameter, "class index out of range");
  const int n = fixed.length() + moving.length();
  std::vector<Letter> base = letter_list(fixed);
  base.resize(n, Letter{0, 0});
  auto moving_bag = letter_bag(moving);
  std::vector<std::pair<Letter, int>> remaining(moving_bag.begin(), moving_bag.end());
  int left = moving.length();

  std::map<Multipartition, BigInt> weighted;
  std::vector<Letter> slots(n);
  // Expand the slot products, branching over A-coefficients.
  std::function<void(int, const BigInt&, const std::vector<Letter>&)> expand =
      [&](int s, const BigInt& w, const std::vector<Letter>& placed) {
        if (s == n) {
          weighted[type_of(slots)] += w;
          return;
        }
        const Letter& a = base[s];
        const Letter& b = placed[s];
        if (a.first == 0 || b.first == 0) {
          slots[s] = a.first == 0 ? b : a;
          expand(s + 1, w, placed);
          return;
        }
        for (int k = 0; k < g.class_count(); ++k) {
          auto coef = g.a_coeff(a.second, b.second, k);
          if (coef == 0) continue;
          slots[s] = {a.first + b.first, k};
          expand(s + 1, w * coef, placed);
        }
      };
  std::vector<Letter> placed(n, Letter{0, 0});
  std::function<void(int)> place = [&](int s) {
    if (left == 0) {
      expand(0, 1, placed);
      return;
    }
    if (n - s < left) return;
    place(s + 1);
    for (auto& [letter, count] : remaining) {
      if (count == 0) continue;
      --count;
      --left;
      placed[s] = letter;
      place(s + 1);
      placed[s] = Letter{0, 0};
      ++left;
      ++count;
    }
  };
  place(0);

  BigInt fixed_stab = stabiliser(letter_bag(fixed), n);
  WeightedSymFn out;
  for (const auto& [type, w] : weighted) {
    BigInt total = w * stabiliser(letter_bag(type), n);
    if (total % fixed_stab != 0) fail(ErrorCode::Validation, "orbit recollection is not exact");
    out.add(type, total / fixed_stab);
  }
  std::lock_guard lock(cache_mu);
  cache.emplace(key, out);
  return out;
}

WeightedSymFn wsf_multiply(const WeightedSymFn& f, const WeightedSymFn& h, const GroupData& g) {
  WeightedSymFn out;
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : h.terms()) out += wsf_basis_product(a, b, g).scaled(x * y);
  return out;
}

TensorPairSum coproduct(const Multipartition& lambda) {
  std::vector<std::pair<Letter, int>> bag;
  for (const auto& kv : letter_bag(lambda)) bag.push_back(kv);
  TensorPairSum out;
  std::vector<int> split(bag.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == bag.size()) {
      std::vector<Letter> left, right;
      for (std::size_t j = 0; j < bag.size(); ++j) {
        for (int k = 0; k < split[j]; ++k) left.push_back(bag[j].first);
        for (int k = split[j]; k < bag[j].second; ++k) right.push_back(bag[j].first);
      }
      out[{type_of(left), type_of(right)}] += 1;
      return;
    }
    for (int a = 0; a <= bag[i].second; ++a) {
      split[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

TensorPairSum coproduct(const WeightedSymFn& f) {
  TensorPairSum out;
  for (const auto& [lambda, c] : f.terms())
    for (const auto& [pair, x] : coproduct(lambda)) {
      auto& slot = out[pair];
      slot += c * x;
      if (slot == 0) out.erase(pair);
    }
  return out;
}

BigInt counit(const WeightedSymFn& f) { return f.coefficient(Multipartition()); }

WeightedSymFn antipode(const Multipartition& lambda, const GroupData& g) {
  static std::recursive_mutex cache_mu;
  static std::map<std::pair<std::vector<std::int64_t>, Multipartition>, WeightedSymFn> cache;
  auto key = std::make_pair(fingerprint(g), lambda);
  {
    std::lock_guard lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  WeightedSymFn out;
  if (lambda.empty()) {
    out = WeightedSymFn::one();
  } else {
    // S(m_λ) = -sum over splittings (μ, ν), ν ≠ ∅, of S(m_μ) m_ν.
    for (const auto& [pair, c] : coproduct(lambda)) {
      const auto& [left, right] = pair;
      if (right.empty()) continue;
      out -= wsf_multiply(antipode(left, g), WeightedSymFn::basis(right), g).scaled(c);
    }
  }
  std::lock_guard lock(cache_mu);
  cache.emplace(key, out);
  return out;
}

WeightedSymFn antipode(const WeightedSymFn& f, const GroupData& g) {
  WeightedSymFn out;
  for (const auto& [lambda, c] : f.terms()) out += antipode(lambda, g).scaled(c);
  return out;
}

TensorPairSum tensor_multiply(const TensorPairSum& a, const TensorPairSum& b, const GroupData& g) {
  TensorPairSum out;
  for (const auto& [p, x] : a)
    for (const auto& [q, y] : b) {
      WeightedSymFn left = wsf_basis_product(p.first, q.first, g);
      WeightedSymFn right = wsf_basis_product(p.second, q.second, g);
      for (const auto& [l1, c1] : left.terms())
        for (const auto& [r1, c2] : right.terms()) {
          auto& slot = out[{l1, r1}];
          slot += x * y * c1 * c2;
          if (slot == 0) out.erase({l1, r1});
        }
    }
  return out;
}

std::vector<BigInt> smith_invariant_factors(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<BigInt> diag;
  auto absval = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: entry of least absolute value in the remaining block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || absval(a[i][j]) < absval(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce the divisibility chain.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag.push_back(absval(a[t][t]));
  }
  return diag;
}

Indecomposables indecomposables(const GroupData& g, int d) {
  if (d < 1) fail(ErrorCode::InvalidParameter, "degree must be positive");
  const int l = g.class_count();
  auto basis = multipartitions_of(d, l);
  std::map<Multipartition, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<BigInt>> rows;
  for (int a = 1; 2 * a <= d; ++a)
    for (const auto& x : multipartitions_of(a, l))
      for (const auto& y : multipartitions_of(d - a, l)) {
        std::vector<BigInt> row(basis.size(), 0);
        WeightedSymFn prod = wsf_basis_product(x, y, g);
        for (const auto& [k, c] : prod.terms()) row[index.at(k)] = c;
        rows.push_back(std::move(row));
      }
  Indecomposables out;
  out.basis_size = static_cast<int>(basis.size());
  out.invariant_factors = smith_invariant_factors(rows);
  out.free_rank = out.basis_size - static_cast<int>(out.invariant_factors.size());
  for (const auto& f : out.invariant_factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

std::map<Partition, BigInt> to_elementary_basis(const WeightedSymFn& f) {
  static const GroupData trivial = builtin_group("trivial");
  std::map<int, std::vector<std::pair<Multipartition, BigInt>>> by_degree;
  for (const auto& [lambda, c] : f.terms()) {
    for (const auto& [cls, p] : lambda.components())
      if (cls != 0) fail(ErrorCode::InvalidParameter, "elementary basis needs a trivial-Γ symmetric function");
    by_degree[lambda.size()].emplace_back(lambda, c);
  }
  std::map<Partition, BigInt> out;
  for (const auto& [d, terms] : by_degree) {
    auto parts = partitions_of(d);
    const std::size_t k = parts.size();
    std::map<Multipartition, std::size_t> row_of;
    for (std::size_t i = 0; i < k; ++i) row_of[Multipartition::concentrated(0, parts[i])] = i;
    // Column j holds e_{parts[j]} in the m-basis.
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1, 0));
    for (std::size_t j = 0; j < k; ++j) {
      WeightedSymFn e = WeightedSymFn::one();
      for (int r : parts[j].parts())
        e = wsf_multiply(e, WeightedSymFn::basis(Multipartition::concentrated(0, Partition(std::vector<int>(r, 1)))),
                         trivial);
      for (const auto& [key, c] : e.terms()) m[row_of.at(key)][j] = Rational(c);
    }
    for (const auto& [key, c] : terms) m[row_of.at(key)][k] = Rational(c);
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t piv = col;
      while (piv < k && m[piv][col] == 0) ++piv;
      if (piv == k) fail(ErrorCode::Validation, "elementary products are not a basis");
      std::swap(m[col], m[piv]);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == col || m[r][col] == 0) continue;
        Rational factor = m[r][col] / m[col][col];
        for (std::size_t j = col; j <= k; ++j) m[r][j] -= factor * m[col][j];
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      Rational v = m[j][k] / m[j][j];
      if (!is_integer(v)) fail(ErrorCode::Validation, "non-integral elementary coefficient");
      if (v != 0) out[parts[j]] += numerator(v);
    }
  }
  return out;
}

std::string to_string(const WeightedSymFn& f, bool short_form) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [lambda, c] : f.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (lambda.empty()) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "*";
    std::string label = to_string(lambda, short_form);
    s += "m" + label;
  }
  return s;
}

}  // namespace wfh
