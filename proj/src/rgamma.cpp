#include "wfh/rgamma.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace wfh {

int total_degree(const ExponentVector& N) { return std::accumulate(N.begin(), N.end(), 0); }

std::vector<ExponentVector> exponent_vectors_of(int degree, int l) {
  std::vector<ExponentVector> out;
  if (l == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  ExponentVector cur(l, 0);
  std::function<void(int, int)> rec = [&](int c, int left) {
    if (c == l - 1) {
      cur[c] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[c] = v;
      rec(c + 1, left - v);
    }
  };
  rec(0, degree);
  return out;
}

std::string to_string_b(const ExponentVector& N) {
  std::string s = "B[";
  for (std::size_t i = 0; i < N.size(); ++i) s += (i ? "," : "") + std::to_string(N[i]);
  return s + "]";
}

RGammaElement RGammaElement::basis(const ExponentVector& N, const BigInt& c) {
  RGammaElement a;
  a.add(N, c);
  return a;
}

RGammaElement RGammaElement::one(int l) { return basis(ExponentVector(l, 0)); }

BigInt RGammaElement::coefficient(const ExponentVector& N) const {
  auto it = terms_.find(N);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void RGammaElement::add(const ExponentVector& N, const BigInt& c) {
  if (c == 0) return;
  for (int v : N)
    if (v < 0) fail(ErrorCode::InvalidParameter, "negative exponent");
  auto [it, inserted] = terms_.try_emplace(N, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RGammaElement& RGammaElement::operator+=(const RGammaElement& o) {
  for (const auto& [N, c] : o.terms_) add(N, c);
  return *this;
}

RGammaElement& RGammaElement::operator-=(const RGammaElement& o) {
  for (const auto& [N, c] : o.terms_) add(N, -c);
  return *this;
}

RGammaElement RGammaElement::scaled(const BigInt& c) const {
  RGammaElement out;
  for (const auto& [N, x] : terms_) out.add(N, x * c);
  return out;
}

RGammaElement RGammaElement::reduced_mod(std::int64_t p) const {
  RGammaElement out;
  for (const auto& [N, x] : terms_) out.add(N, mod_p(x, p));
  return out;
}

std::string to_string(const RGammaElement& a) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [N, c] : a.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) s += mag.str() + "*";
    s += to_string_b(N);
  }
  return s;
}

TPolynomial TPolynomial::constant(const Rational& c, int l) {
  TPolynomial p;
  p.add(std::vector<int>(l, 0), c);
  return p;
}

TPolynomial TPolynomial::variable(int c, int l) {
  TPolynomial p;
  std::vector<int> e(l, 0);
  e[c] = 1;
  p.add(e, 1);
  return p;
}

void TPolynomial::add(const std::vector<int>& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TPolynomial TPolynomial::operator+(const TPolynomial& o) const {
  TPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

TPolynomial TPolynomial::operator-(const TPolynomial& o) const { return *this + o.scaled(-1); }

TPolynomial TPolynomial::operator*(const TPolynomial& o) const {
  TPolynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add(e, c1 * c2);
    }
  return r;
}

TPolynomial TPolynomial::scaled(const Rational& c) const {
  TPolynomial r;
  for (const auto& [e, x] : terms_) r.add(e, x * c);
  return r;
}

int TPolynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

TPolynomial TPolynomial::top_part() const {
  int d = total_degree();
  TPolynomial r;
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.add(e, c);
  return r;
}

namespace {

ExponentVector plus(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

std::map<ExponentVector, TPolynomial> omega_expand(const GroupData& g, int D) {
  if (D < 0) fail(ErrorCode::InvalidParameter, "expansion degree must be non-negative");
  const int l = g.class_count();
  using ClassVec = std::vector<Rational>;
  using Series = std::map<ExponentVector, ClassVec>;
  auto class_mul = [&](const ClassVec& u, const ClassVec& v) {
    ClassVec w(l, 0);
    for (int i = 0; i < l; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < l; ++j) {
        if (v[j] == 0) continue;
        for (int k = 0; k < l; ++k)
          if (auto a = g.a_coeff(i, j, k)) w[k] += u[i] * v[j] * Rational(a);
      }
    }
    return w;
  };
  auto series_mul = [&](const Series& a, const Series& b) {
    Series r;
    for (const auto& [e1, u] : a)
      for (const auto& [e2, v] : b) {
        if (total_degree(e1) + total_degree(e2) > D) continue;
        ClassVec w = class_mul(u, v);
        auto& slot = r.try_emplace(plus(e1, e2), ClassVec(l, 0)).first->second;
        for (int k = 0; k < l; ++k) slot[k] += w[k];
      }
    return r;
  };
  Series s;
  for (int c = 0; c < l; ++c) {
    ExponentVector e(l, 0);
    e[c] = 1;
    ClassVec v(l, 0);
    v[c] = 1;
    s.emplace(e, v);
  }
  // log(1 + S) = sum_i (-1)^{i-1} S^i / i
  Series log_series;
  Series power = s;
  for (int i = 1; i <= D; ++i) {
    Rational f(i % 2 == 1 ? 1 : -1, i);
    for (const auto& [e, v] : power) {
      auto& slot = log_series.try_emplace(e, ClassVec(l, 0)).first->second;
      for (int k = 0; k < l; ++k) slot[k] += f * v[k];
    }
    if (i < D) power = series_mul(power, s);
  }
  using TSeries = std::map<ExponentVector, TPolynomial>;
  TSeries lin;
  for (const auto& [e, v] : log_series) {
    TPolynomial t;
    for (int k = 0; k < l; ++k) t = t + TPolynomial::variable(k, l).scaled(v[k]);
    if (!t.is_zero()) lin.emplace(e, t);
  }
  auto tseries_mul = [&](const TSeries& a, const TSeries& b) {
    TSeries r;
    for (const auto& [e1, p] : a)
      for (const auto& [e2, q] : b) {
        if (total_degree(e1) + total_degree(e2) > D) continue;
        auto& slot = r[plus(e1, e2)];
        slot = slot + p * q;
      }
    return r;
  };
  TSeries result;
  result[ExponentVector(l, 0)] = TPolynomial::constant(1, l);
  TSeries term = result;
  for (int k = 1; k <= D; ++k) {
    term = tseries_mul(term, lin);
    for (const auto& [e, p] : term) {
      auto& slot = result[e];
      slot = slot + p.scaled(Rational(1) / Rational(factorial(k)));
    }
  }
  for (int d = 0; d <= D; ++d)
    for (const auto& e : exponent_vectors_of(d, l)) result.try_emplace(e);
  return result;
}

RGammaElement rg_basis_product(const GroupData& g, const ExponentVector& N, const ExponentVector& M) {
  const int l = g.class_count();
  if (static_cast<int>(N.size()) != l || static_cast<int>(M.size()) != l)
    fail(ErrorCode::InvalidParameter, "exponent vector length differs from class count");
  static std::mutex cache_mu;
  static std::map<std::tuple<std::vector<std::int64_t>, ExponentVector, ExponentVector>, RGammaElement> cache;
  std::vector<std::int64_t> fingerprint;
  fingerprint.push_back(l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k) fingerprint.push_back(g.a_coeff(i, j, k));
  auto key = std::make_tuple(fingerprint, N, M);
  {
    std::lock_guard lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Each z_i factor contributes x_i, y_i or some x_j y_k; choose how many
  // x_j y_k pairs of each kind (e_t) and the rest is forced.
  struct Triple {
    int i, j, k;
    std::int64_t a;
  };
  std::vector<Triple> triples;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k)
        if (auto a = g.a_coeff(j, k, i)) triples.push_back({i, j, k, a});
  RGammaElement out;
  std::vector<int> xuse(l, 0), yuse(l, 0), e(triples.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == triples.size()) {
      ExponentVector K(l, 0);
      std::vector<int> a(l), b(l);
      BigInt denom = 1;
      BigInt weight = 1;
      for (int i = 0; i < l; ++i) {
        a[i] = N[i] - xuse[i];
        b[i] = M[i] - yuse[i];
        K[i] = a[i] + b[i];
        denom *= factorial(a[i]) * factorial(b[i]);
      }
      for (std::size_t s = 0; s < triples.size(); ++s) {
        if (e[s] == 0) continue;
        K[triples[s].i] += e[s];
        denom *= factorial(e[s]);
        for (int r = 0; r < e[s]; ++r) weight *= triples[s].a;
      }
      BigInt num = 1;
      for (int i = 0; i < l; ++i) num *= factorial(K[i]);
      out.add(K, num / denom * weight);
      return;
    }
    const Triple& tr = triples[t];
    int most = std::min(N[tr.j] - xuse[tr.j], M[tr.k] - yuse[tr.k]);
    for (int v = 0; v <= most; ++v) {
      e[t] = v;
      xuse[tr.j] += v;
      yuse[tr.k] += v;
      rec(t + 1);
      xuse[tr.j] -= v;
      yuse[tr.k] -= v;
    }
    e[t] = 0;
  };
  rec(0);
  std::lock_guard lock(cache_mu);
  cache.emplace(key, out);
  return out;
}

RGammaElement rg_multiply(const RGammaElement& a, const RGammaElement& b, const GroupData& g) {
  RGammaElement out;
  for (const auto& [N, x] : a.terms())
    for (const auto& [M, y] : b.terms()) out += rg_basis_product(g, N, M).scaled(x * y);
  return out;
}

CentreElement ev_r(const ExponentVector& N, int n) {
  CentreElement out(n);
  int total = total_degree(N);
  if (N.empty() || total > n) return out;
  int coloured = total - N[0];
  std::map<int, Partition> comps;
  comps.emplace(0, Partition(std::vector<int>(n - coloured, 1)));
  for (std::size_t c = 1; c < N.size(); ++c) comps.emplace(static_cast<int>(c), Partition(std::vector<int>(N[c], 1)));
  out.add(Multipartition(std::move(comps)), binomial(BigInt(n - total + N[0]), N[0]));
  return out;
}

CentreElement ev_r(const RGammaElement& a, int n) {
  CentreElement out(n);
  for (const auto& [N, c] : a.terms()) out += ev_r(N, n).scaled(c);
  return out;
}

Rational weighted_binomial_coefficient(const ExponentVector& N, const std::vector<std::vector<Rational>>& w,
                                       const std::vector<long long>& e) {
  const std::size_t blocks = w.size();
  const std::size_t l = N.size();
  Rational total = 0;
  ExponentVector left = N;
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t u, Rational acc) {
    if (u == blocks) {
      for (int v : left)
        if (v != 0) return;
      total += acc;
      return;
    }
    // Choose the part K of N drawn from block u.
    ExponentVector K(l, 0);
    std::function<void(std::size_t)> pick = [&](std::size_t c) {
      if (c == l) {
        int k = total_degree(K);
        BigInt multinom = factorial(k);
        Rational weight = 1;
        for (std::size_t i = 0; i < l; ++i) {
          multinom /= factorial(K[i]);
          for (int r = 0; r < K[i]; ++r) weight *= w[u][i];
        }
        BigInt bin = binomial(BigInt(e[u]), k);
        if (bin == 0 || weight == 0) return;
        for (std::size_t i = 0; i < l; ++i) left[i] -= K[i];
        rec(u + 1, acc * Rational(bin * multinom) * weight);
        for (std::size_t i = 0; i < l; ++i) left[i] += K[i];
        return;
      }
      for (int v = 0; v <= left[c]; ++v) {
        K[c] = v;
        pick(c + 1);
      }
      K[c] = 0;
    };
    pick(0);
  };
  rec(0, 1);
  return total;
}

std::vector<std::int64_t> class_power_mod_p(const GroupData& g, const std::vector<std::int64_t>& q, int p) {
  const int l = g.class_count();
  std::vector<std::int64_t> acc(l, 0);
  acc[0] = 1;
  for (int step = 0; step < p; ++step) {
    std::vector<std::int64_t> next(l, 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        for (int k = 0; k < l; ++k)
          next[k] = (next[k] + acc[i] * q[j] % p * (g.a_coeff(i, j, k) % p)) % p;
    acc = next;
  }
  return acc;
}

RGammaElement b_qr_mod_p(const std::vector<std::int64_t>& q, int r, int p) {
  if (p < 2 || r < 0) fail(ErrorCode::InvalidParameter, "need prime p and r >= 0");
  int degree = 1;
  for (int i = 0; i < r; ++i) degree *= p;
  RGammaElement out;
  for (const auto& M : exponent_vectors_of(degree, static_cast<int>(q.size()))) {
    std::int64_t coef = 1;
    for (std::size_t c = 0; c < q.size(); ++c)
      for (int k = 0; k < M[c]; ++k) coef = coef * (((q[c] % p) + p) % p) % p;
    out.add(M, coef);
  }
  return out;
}

RGammaElement rg_power_mod_p(const RGammaElement& a, int k, int p, const GroupData& g) {
  RGammaElement acc = RGammaElement::one(g.class_count());
  for (int i = 0; i < k; ++i) acc = rg_multiply(acc, a, g).reduced_mod(p);
  return acc;
}

namespace {

std::int64_t lucas_binomial(const std::vector<int>& t_digits, int k, int p) {
  std::int64_t result = 1;
  std::size_t i = 0;
  while (k > 0) {
    int kd = k % p;
    int td = i < t_digits.size() ? t_digits[i] : 0;
    if (kd > td) return 0;
    result = result * mod_p(binomial(BigInt(td), kd), p) % p;
    k /= p;
    ++i;
  }
  return result;
}

}  // namespace

std::int64_t modular_hom(const GroupData& g, int p, const std::vector<std::vector<int>>& digits,
                         const ExponentVector& N) {
  auto blocks = p_blocks(g, p);
  const int l = g.class_count();
  if (static_cast<int>(N.size()) != l) fail(ErrorCode::InvalidParameter, "exponent vector length differs from class count");
  if (digits.size() != blocks.size())
    fail(ErrorCode::InvalidParameter, "need one digit sequence per p-block (" + std::to_string(blocks.size()) + ")");
  int size = total_degree(N);
  std::size_t needed = 0;
  if (size > 0) {
    long long power = 1;
    while (power < size) {
      power *= p;
      ++needed;
    }
    ++needed;
  }
  for (const auto& d : digits) {
    if (d.size() < needed)
      fail(ErrorCode::Precision, "need " + std::to_string(needed) + " base-" + std::to_string(p) + " digits per block");
    for (int x : d)
      if (x < 0 || x >= p) fail(ErrorCode::InvalidParameter, "digit outside [0, p)");
  }
  std::vector<std::vector<std::int64_t>> w(blocks.size(), std::vector<std::int64_t>(l));
  for (std::size_t u = 0; u < blocks.size(); ++u)
    for (int c = 0; c < l; ++c) w[u][c] = mod_p(central_character_int(g, blocks[u][0], c), p);

  std::int64_t total = 0;
  ExponentVector left = N;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t u, std::int64_t acc) {
    if (u == blocks.size()) {
      for (int v : left)
        if (v != 0) return;
      total = (total + acc) % p;
      return;
    }
    ExponentVector K(l, 0);
    std::function<void(int)> pick = [&](int c) {
      if (c == l) {
        int k = total_degree(K);
        std::int64_t bin = lucas_binomial(digits[u], k, p);
        if (bin == 0) return;
        BigInt multinom = factorial(k);
        std::int64_t weight = 1;
        for (int i = 0; i < l; ++i) {
          multinom /= factorial(K[i]);
          for (int r = 0; r < K[i]; ++r) weight = weight * w[u][i] % p;
        }
        std::int64_t term = acc * bin % p * mod_p(multinom, p) % p * weight % p;
        if (term == 0) return;
        for (int i = 0; i < l; ++i) left[i] -= K[i];
        rec(u + 1, term);
        for (int i = 0; i < l; ++i) left[i] += K[i];
        return;
      }
      for (int v = 0; v <= left[c]; ++v) {
        K[c] = v;
        pick(c + 1);
      }
      K[c] = 0;
    };
    pick(0);
  };
  rec(0, 1);
  return total;
}

std::int64_t modular_hom(const GroupData& g, int p, const std::vector<std::vector<int>>& digits,
                         const RGammaElement& a) {
  std::int64_t total = 0;
  for (const auto& [N, c] : a.terms()) total = (total + mod_p(c, p) * modular_hom(g, p, digits, N)) % p;
  return total;
}

}  // namespace wfh
