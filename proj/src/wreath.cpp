#include "wfh/wreath.hpp"

#include <algorithm>
#include <numeric>

namespace wfh {

std::size_t WreathElementHash::operator()(const WreathElement& e) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (int i = 0; i < kMaxDegree; ++i) {
    h = (h ^ e.perm[i]) * 1099511628211ULL;
    h = (h ^ e.color[i]) * 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t TypeKeyHash::operator()(const TypeKey& k) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ k.count;
  for (int i = 0; i < k.count; ++i) h = (h ^ k.entries[i]) * 1099511628211ULL;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

WreathElement identity_element() {
  WreathElement e;
  for (int i = 0; i < kMaxDegree; ++i) {
    e.perm[i] = static_cast<std::uint8_t>(i);
    e.color[i] = 0;
  }
  return e;
}

WreathElement make_element(const std::vector<int>& colors, const std::vector<int>& perm) {
  if (colors.size() != perm.size() || perm.size() > static_cast<std::size_t>(kMaxDegree))
    fail(ErrorCode::InvalidParameter, "colors and perm must have equal length <= 16");
  WreathElement e = identity_element();
  std::vector<bool> hit(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] < 0 || perm[i] >= static_cast<int>(perm.size()) || hit[perm[i]])
      fail(ErrorCode::InvalidParameter, "perm is not a permutation");
    hit[perm[i]] = true;
    e.perm[i] = static_cast<std::uint8_t>(perm[i]);
    e.color[i] = static_cast<std::uint8_t>(colors[i]);
  }
  return e;
}

BigInt AlgebraElement::coefficient(const WreathElement& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void AlgebraElement::add(const WreathElement& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const BigInt& c) const {
  AlgebraElement out(n_);
  if (c == 0) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

BigInt CentreElement::coefficient(const Multipartition& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void CentreElement::add(const Multipartition& m, const BigInt& c) {
  if (c == 0) return;
  if (m.size() != n_) fail(ErrorCode::InvalidParameter, "class label size differs from n");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CentreElement& CentreElement::operator+=(const CentreElement& o) {
  if (o.n_ != n_ && !o.terms_.empty()) fail(ErrorCode::InvalidParameter, "centre elements of different n");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

CentreElement CentreElement::scaled(const BigInt& c) const {
  CentreElement out(n_);
  for (const auto& [m, x] : terms_) out.add(m, x * c);
  return out;
}

Wreath::Wreath(GroupData g) : g_(std::move(g)) {}

void Wreath::check_degree(int n) const {
  if (n < 0 || n > kMaxDegree)
    fail(ErrorCode::InvalidParameter, "n must lie in [0, " + std::to_string(kMaxDegree) + "]");
}

WreathElement Wreath::multiply(const WreathElement& a, const WreathElement& b) const {
  WreathElement r;
  for (int j = 0; j < kMaxDegree; ++j) {
    int i = a.perm[j];
    r.color[i] = static_cast<std::uint8_t>(g_.mul(a.color[i], b.color[j]));
    r.perm[j] = a.perm[b.perm[j]];
  }
  return r;
}

WreathElement Wreath::inverse(const WreathElement& a) const {
  WreathElement r;
  for (int j = 0; j < kMaxDegree; ++j) {
    int i = a.perm[j];
    r.perm[i] = static_cast<std::uint8_t>(j);
    r.color[j] = static_cast<std::uint8_t>(g_.inv(a.color[i]));
  }
  return r;
}

TypeKey Wreath::type_key(const WreathElement& a, int n) const {
  TypeKey key;
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    if (seen >> i & 1U) continue;
    int len = 0;
    int prod = 0;
    int j = i;
    do {
      seen |= 1U << j;
      prod = g_.mul(a.color[j], prod);
      j = a.perm[j];
      ++len;
    } while (j != i);
    key.entries[key.count++] = static_cast<std::uint16_t>(len << 8 | g_.class_of(prod));
  }
  std::sort(key.entries.begin(), key.entries.begin() + key.count, std::greater<>());
  return key;
}

Multipartition Wreath::cycle_type(const WreathElement& a, int n) const {
  check_degree(n);
  return from_key(type_key(a, n));
}

TypeKey Wreath::to_key(const Multipartition& type) {
  TypeKey key;
  for (const auto& [c, p] : type.components())
    for (int part : p.parts()) {
      if (key.count >= kMaxDegree) fail(ErrorCode::InvalidParameter, "cycle type too long");
      key.entries[key.count++] = static_cast<std::uint16_t>(part << 8 | c);
    }
  std::sort(key.entries.begin(), key.entries.begin() + key.count, std::greater<>());
  return key;
}

Multipartition Wreath::from_key(const TypeKey& key) {
  std::map<int, std::vector<int>> parts;
  for (int i = 0; i < key.count; ++i) parts[key.entries[i] & 0xff].push_back(key.entries[i] >> 8);
  std::map<int, Partition> comps;
  for (auto& [c, v] : parts) comps.emplace(c, Partition::from_unsorted(std::move(v)));
  return Multipartition(std::move(comps));
}

BigInt Wreath::class_size(const Multipartition& type, int n) const {
  if (type.size() != n) fail(ErrorCode::InvalidParameter, "cycle type size differs from n");
  BigInt num = factorial(n);
  for (int i = 0; i < n; ++i) num *= g_.order();
  BigInt z = 1;
  for (const auto& [c, p] : type.components()) {
    if (c >= g_.class_count()) fail(ErrorCode::InvalidParameter, "class index out of range");
    int zeta = g_.order() / g_.class_size(c);
    for (int i = 1; i <= p.size(); ++i) {
      int m = p.multiplicity(i);
      for (int k = 0; k < m; ++k) z *= i * zeta;
      z *= factorial(m);
    }
  }
  return num / z;
}

WreathElement Wreath::representative(const Multipartition& type, int n) const {
  check_degree(n);
  if (type.size() != n) fail(ErrorCode::InvalidParameter, "cycle type size differs from n");
  TypeKey key = to_key(type);
  WreathElement e = identity_element();
  int p = 0;
  for (int i = 0; i < key.count; ++i) {
    int len = key.entries[i] >> 8;
    int c = key.entries[i] & 0xff;
    for (int k = 0; k < len; ++k) e.perm[p + k] = static_cast<std::uint8_t>(p + (k + 1) % len);
    e.color[p] = static_cast<std::uint8_t>(g_.representative(c));
    p += len;
  }
  return e;
}

namespace {

void guard_count(const BigInt& count, const char* what) {
  if (count > BigInt(max_enumeration()))
    fail(ErrorCode::ResourceLimit, std::string(what) + " would enumerate " + count.str() +
                                       " elements (cap " + std::to_string(max_enumeration()) + ")");
}

}  // namespace

void Wreath::for_each_in_class(const Multipartition& type, int n,
                               const std::function<void(const WreathElement&)>& fn) const {
  check_degree(n);
  guard_count(class_size(type, n), "class enumeration");
  TypeKey key = to_key(type);
  std::vector<std::pair<int, int>> remaining;  // (entry, count)
  for (int i = 0; i < key.count; ++i) {
    if (!remaining.empty() && remaining.back().first == key.entries[i])
      ++remaining.back().second;
    else
      remaining.emplace_back(key.entries[i], 1);
  }
  WreathElement cur = identity_element();
  std::uint32_t used = 0;
  const int order = g_.order();
  std::vector<int> cycle;

  std::function<void()> next_cycle;
  std::function<void(int, int, int)> place;  // (entry index, points placed, colour product so far)

  auto finish_colours = [&](int c, std::function<void()> cont) {
    // cycle holds the points; colours of all but the last are already set.
    int len = static_cast<int>(cycle.size());
    std::function<void(int, int)> colour = [&](int pos, int prod) {
      if (pos == len - 1) {
        int last = cycle[pos];
        for (int k : g_.class_elements(c)) {
          cur.color[last] = static_cast<std::uint8_t>(g_.mul(k, g_.inv(prod)));
          cont();
        }
        cur.color[last] = 0;
        return;
      }
      for (int x = 0; x < order; ++x) {
        cur.color[cycle[pos]] = static_cast<std::uint8_t>(x);
        colour(pos + 1, g_.mul(x, prod));
      }
      cur.color[cycle[pos]] = 0;
    };
    colour(0, 0);
  };

  place = [&](int idx, int len, int) {
    int want = remaining[idx].first >> 8;
    if (static_cast<int>(cycle.size()) == want) {
      for (int k = 0; k < want; ++k) cur.perm[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % want]);
      std::vector<int> saved = cycle;
      finish_colours(remaining[idx].first & 0xff, [&]() {
        std::vector<int> inner = cycle;
        cycle.clear();
        next_cycle();
        cycle = inner;
      });
      for (int p : saved) cur.perm[p] = static_cast<std::uint8_t>(p);
      return;
    }
    for (int p = 0; p < n; ++p) {
      if (used >> p & 1U) continue;
      used |= 1U << p;
      cycle.push_back(p);
      place(idx, len + 1, 0);
      cycle.pop_back();
      used &= ~(1U << p);
    }
  };

  next_cycle = [&]() {
    int start = -1;
    for (int p = 0; p < n; ++p)
      if (!(used >> p & 1U)) {
        start = p;
        break;
      }
    if (start < 0) {
      fn(cur);
      return;
    }
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
      if (remaining[idx].second == 0) continue;
      --remaining[idx].second;
      used |= 1U << start;
      cycle.assign(1, start);
      place(static_cast<int>(idx), 1, 0);
      cycle.clear();
      used &= ~(1U << start);
      ++remaining[idx].second;
    }
  };

  if (n == 0) {
    if (key.count == 0) fn(cur);
    return;
  }
  next_cycle();
}

void Wreath::for_each_element(int n, const std::function<void(const WreathElement&)>& fn) const {
  check_degree(n);
  BigInt total = factorial(n);
  for (int i = 0; i < n; ++i) total *= g_.order();
  guard_count(total, "group enumeration");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  WreathElement e = identity_element();
  do {
    for (int i = 0; i < n; ++i) e.perm[i] = static_cast<std::uint8_t>(perm[i]);
    std::function<void(int)> colour = [&](int pos) {
      if (pos == n) {
        fn(e);
        return;
      }
      for (int x = 0; x < g_.order(); ++x) {
        e.color[pos] = static_cast<std::uint8_t>(x);
        colour(pos + 1);
      }
      e.color[pos] = 0;
    };
    colour(0);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

AlgebraElement Wreath::class_sum(const Multipartition& type, int n) const {
  AlgebraElement out(n);
  for_each_in_class(type, n, [&](const WreathElement& e) { out.add(e, 1); });
  return out;
}

AlgebraElement Wreath::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out(std::max(a.degree(), b.degree()));
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) out.add(multiply(x, y), cx * cy);
  return out;
}

CentreElement Wreath::centre_product(const Multipartition& mu, const Multipartition& nu, int n) const {
  check_degree(n);
  if (mu.size() != n || nu.size() != n) fail(ErrorCode::InvalidParameter, "class label size differs from n");
  auto cache_key = std::make_tuple(mu, nu, n);
  {
    std::lock_guard lock(mu_);
    auto it = products_.find(cache_key);
    if (it != products_.end()) return it->second;
  }
  // X_a X_b = sum_lambda (|C_b| N_lambda / |C_lambda|) X_lambda where
  // N_lambda counts a in C_a with a b0 of type lambda, b0 fixed in C_b.
  BigInt size_mu = class_size(mu, n);
  BigInt size_nu = class_size(nu, n);
  const Multipartition& enumerated = size_mu <= size_nu ? mu : nu;
  const Multipartition& fixed = size_mu <= size_nu ? nu : mu;
  BigInt fixed_size = size_mu <= size_nu ? size_nu : size_mu;
  WreathElement b0 = representative(fixed, n);
  std::unordered_map<TypeKey, std::int64_t, TypeKeyHash> counts;
  for_each_in_class(enumerated, n, [&](const WreathElement& a) { ++counts[type_key(multiply(a, b0), n)]; });
  CentreElement out(n);
  for (const auto& [key, count] : counts) {
    Multipartition lambda = from_key(key);
    BigInt total = fixed_size * count;
    BigInt size_lambda = class_size(lambda, n);
    if (total % size_lambda != 0) fail(ErrorCode::Validation, "centre product count is not class-constant");
    out.add(lambda, total / size_lambda);
  }
  std::lock_guard lock(mu_);
  products_.emplace(cache_key, out);
  return out;
}

CentreElement Wreath::centre_multiply(const CentreElement& a, const CentreElement& b) const {
  if (a.degree() != b.degree()) fail(ErrorCode::InvalidParameter, "centre elements of different n");
  CentreElement out(a.degree());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) out += centre_product(x, y, a.degree()).scaled(cx * cy);
  return out;
}

AlgebraElement Wreath::jm_element(int j, int c, int n) const {
  std::vector<BigInt> coeffs(g_.class_count(), 0);
  if (c < 0 || c >= g_.class_count()) fail(ErrorCode::InvalidParameter, "class index out of range");
  coeffs[c] = 1;
  return jm_element(j, coeffs, n);
}

AlgebraElement Wreath::jm_element(int j, const std::vector<BigInt>& coeffs, int n) const {
  check_degree(n);
  if (j < 1 || j > n) fail(ErrorCode::InvalidParameter, "JM index out of range");
  AlgebraElement out(n);
  for (int c = 0; c < g_.class_count() && c < static_cast<int>(coeffs.size()); ++c) {
    if (coeffs[c] == 0) continue;
    for (int i = 1; i < j; ++i)
      for (int g1 = 0; g1 < g_.order(); ++g1)
        for (int k : g_.class_elements(c)) {
          WreathElement e = identity_element();
          e.perm[i - 1] = static_cast<std::uint8_t>(j - 1);
          e.perm[j - 1] = static_cast<std::uint8_t>(i - 1);
          e.color[i - 1] = static_cast<std::uint8_t>(g1);
          e.color[j - 1] = static_cast<std::uint8_t>(g_.mul(k, g_.inv(g1)));
          out.add(e, coeffs[c]);
        }
  }
  return out;
}

AlgebraElement Wreath::slot_class(int d, int c, int n) const {
  check_degree(n);
  if (d < 1 || d > n) fail(ErrorCode::InvalidParameter, "slot out of range");
  AlgebraElement out(n);
  for (int k : g_.class_elements(c)) {
    WreathElement e = identity_element();
    e.color[d - 1] = static_cast<std::uint8_t>(k);
    out.add(e, 1);
  }
  return out;
}

const AlgebraElement& Wreath::jm_power(int d, int r) const {
  {
    std::lock_guard lock(mu_);
    auto it = jm_powers_.find({d, r});
    if (it != jm_powers_.end()) return *it->second;
  }
  AlgebraElement value(d);
  if (r == 0)
    value.add(identity_element(), 1);
  else
    value = multiply(jm_power(d, r - 1), jm_element(d, 0, d));
  guard_count(BigInt(value.support_size()), "JM power");
  std::lock_guard lock(mu_);
  auto& slot = jm_powers_[{d, r}];
  if (!slot) slot = std::make_unique<AlgebraElement>(std::move(value));
  return *slot;
}

const Wreath::SlotFactor& Wreath::slot_factor(int d, const Letter& letter) const {
  auto key = std::make_pair(d, letter);
  {
    std::lock_guard lock(mu_);
    auto it = slot_factors_.find(key);
    if (it != slot_factors_.end()) return *it->second;
  }
  AlgebraElement y = multiply(jm_power(d, letter.first), slot_class(d, letter.second, d));
  auto f = std::make_unique<SlotFactor>();
  for (const auto& [e, c] : y.terms()) f->inverse_terms.emplace_back(inverse(e), c);
  std::sort(f->inverse_terms.begin(), f->inverse_terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::lock_guard lock(mu_);
  auto& slot = slot_factors_[key];
  if (!slot) slot = std::move(f);
  return *slot;
}

const std::vector<Multipartition>& Wreath::candidate_labels(int max_affected) const {
  {
    std::lock_guard lock(mu_);
    auto it = candidates_.find(max_affected);
    if (it != candidates_.end()) return *it->second;
  }
  auto list = std::make_unique<std::vector<Multipartition>>();
  for (int k = 0; k <= max_affected; ++k)
    for (auto& m : multipartitions_of(k, g_.class_count()))
      if (m.affected() <= max_affected) list->push_back(std::move(m));
  std::lock_guard lock(mu_);
  auto& slot = candidates_[max_affected];
  if (!slot) slot = std::move(list);
  return *slot;
}

std::shared_ptr<const Wreath::Lookup> Wreath::monomial_lookup(const LetterBag& bag, int n) const {
  auto cache_key = std::make_pair(bag, n);
  {
    std::lock_guard lock(mu_);
    auto it = monomials_.find(cache_key);
    if (it != monomials_.end()) return it->second;
  }
  auto out = std::make_shared<Lookup>();
  int letters = 0;
  int reach = 0;
  for (const auto& [letter, count] : bag) {
    letters += count;
    reach += count * (letter.first + 1);
  }
  if (letters == 0) {
    out->by_key.emplace(to_key(Multipartition::concentrated(0, Partition(std::vector<int>(n, 1)))), 1);
  } else if (letters <= n) {
    // ev_n(m) = ev_{n-1}(m) + sum over letters t of ev_{n-1}(m - t) * Y_n(t),
    // read off at one representative per class.
    auto previous = monomial_lookup(bag, n - 1);
    std::vector<std::pair<const SlotFactor*, std::shared_ptr<const Lookup>>> branches;
    for (const auto& [letter, count] : bag) {
      LetterBag smaller = bag;
      if (--smaller[letter] == 0) smaller.erase(letter);
      branches.emplace_back(&slot_factor(n, letter), monomial_lookup(smaller, n - 1));
    }
    auto lookup = [&](const Lookup& table, const WreathElement& h) -> const BigInt* {
      if (h.perm[n - 1] != n - 1 || h.color[n - 1] != 0) return nullptr;
      auto it = table.by_key.find(type_key(h, n - 1));
      return it == table.by_key.end() ? nullptr : &it->second;
    };
    for (const auto& label : candidate_labels(std::min(reach, n))) {
      auto type = unreduce_partial(label, n);
      if (!type) continue;
      WreathElement g = representative(*type, n);
      BigInt coef = 0;
      if (const BigInt* v = lookup(*previous, g)) coef += *v;
      for (const auto& [factor, table] : branches) {
        if (table->by_key.empty()) continue;
        for (const auto& [yinv, cy] : factor->inverse_terms)
          if (const BigInt* v = lookup(*table, multiply(g, yinv))) coef += *v * cy;
      }
      if (coef != 0) out->by_key.emplace(to_key(*type), std::move(coef));
    }
  }
  std::lock_guard lock(mu_);
  auto [it, inserted] = monomials_.emplace(cache_key, out);
  return it->second;
}

namespace {

std::map<std::pair<int, int>, int> letters_of(const Multipartition& lambda) {
  std::map<std::pair<int, int>, int> bag;
  for (const auto& [c, p] : lambda.components())
    for (int r : p.parts()) ++bag[{r, c}];
  return bag;
}

}  // namespace

CentreElement Wreath::evaluate_weighted_monomial_central(const Multipartition& lambda, int n) const {
  check_degree(n);
  for (const auto& [c, p] : lambda.components())
    if (c >= g_.class_count()) fail(ErrorCode::InvalidParameter, "class index out of range");
  auto table = monomial_lookup(letters_of(lambda), n);
  CentreElement out(n);
  for (const auto& [key, c] : table->by_key) out.add(from_key(key), c);
  return out;
}

AlgebraElement Wreath::evaluate_weighted_monomial(const Multipartition& lambda, int n) const {
  check_degree(n);
  for (const auto& [c, p] : lambda.components())
    if (c >= g_.class_count()) fail(ErrorCode::InvalidParameter, "class index out of range");
  auto bag = letters_of(lambda);
  std::vector<std::pair<Letter, int>> letters(bag.begin(), bag.end());
  AlgebraElement total(n);
  AlgebraElement unit(n);
  unit.add(identity_element(), 1);
  int left = lambda.length();
  std::function<void(int, const AlgebraElement&)> rec = [&](int d, const AlgebraElement& acc) {
    if (left == 0) {
      total += acc;
      guard_count(BigInt(total.support_size()), "monomial evaluation");
      return;
    }
    if (d > n || n - d + 1 < left) return;
    rec(d + 1, acc);
    for (auto& [letter, count] : letters) {
      if (count == 0) continue;
      --count;
      --left;
      AlgebraElement y = multiply(jm_power(d, letter.first), slot_class(d, letter.second, d));
      rec(d + 1, multiply(acc, y));
      ++left;
      ++count;
    }
  };
  rec(1, unit);
  AlgebraElement out(n);
  out += total;
  to_centre(out);
  return out;
}

CentreElement Wreath::to_centre(const AlgebraElement& a) const {
  int n = a.degree();
  std::unordered_map<TypeKey, std::pair<BigInt, std::int64_t>, TypeKeyHash> seen;
  for (const auto& [e, c] : a.terms()) {
    auto [it, inserted] = seen.try_emplace(type_key(e, n), c, 0);
    if (!inserted && it->second.first != c)
      fail(ErrorCode::NotCentral, "coefficients differ within a conjugacy class");
    ++it->second.second;
  }
  CentreElement out(n);
  for (const auto& [key, v] : seen) {
    Multipartition type = from_key(key);
    if (class_size(type, n) != v.second) fail(ErrorCode::NotCentral, "conjugacy class only partly present");
    out.add(type, v.first);
  }
  return out;
}

AlgebraElement Wreath::from_centre(const CentreElement& z) const {
  AlgebraElement out(z.degree());
  for (const auto& [type, c] : z.terms())
    for_each_in_class(type, z.degree(), [&](const WreathElement& e) { out.add(e, c); });
  return out;
}

std::string to_string(const CentreElement& z, bool short_form) {
  if (z.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : z.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) s += mag.str() + "*";
    s += "X'" + to_string(m, short_form);
  }
  return s;
}

}  // namespace wfh
