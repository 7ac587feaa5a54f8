#include "wfh/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

namespace wfh {

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) fail(ErrorCode::InvalidParameter, "mn_character: sizes differ");
  static std::mutex memo_mu;
  static std::map<std::pair<Partition, Partition>, BigInt> memo;
  if (mu.empty()) return 1;
  {
    std::lock_guard lock(memo_mu);
    auto it = memo.find({lambda, mu});
    if (it != memo.end()) return it->second;
  }
  std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
  Partition smaller(rest);
  BigInt value = 0;
  for (const auto& strip : border_strips(lambda, mu[0])) {
    BigInt v = mn_character(strip.result, smaller);
    value += strip.height % 2 ? BigInt(-v) : v;
  }
  std::lock_guard lock(memo_mu);
  memo.emplace(std::make_pair(lambda, mu), value);
  return value;
}

Rational evaluate_at_contents(const TensorElement& f, const Multipartition& lambda, const GroupData& g) {
  const auto& irr = g.irreps();
  const int l = g.class_count();
  for (const auto& [u, p] : lambda.components())
    if (u < 0 || u >= static_cast<int>(irr.size())) fail(ErrorCode::InvalidParameter, "irrep index out of range");
  // omega[u][c] and the JM scale |Γ|/dim per irrep.
  std::vector<std::vector<Rational>> omega(irr.size(), std::vector<Rational>(l));
  for (std::size_t u = 0; u < irr.size(); ++u)
    for (int c = 0; c < l; ++c) omega[u][c] = central_character(g, static_cast<int>(u), c);
  std::vector<std::pair<int, Rational>> boxes;  // (irrep, scaled content)
  for (const auto& [u, p] : lambda.components())
    for (int k : contents(p)) boxes.emplace_back(u, Rational(g.order(), irr[u].dim) * k);
  std::vector<long long> exps(irr.size(), 0);
  for (const auto& [u, p] : lambda.components()) exps[u] = p.size();

  Rational total = 0;
  for (const auto& [key, coeff] : f.terms()) {
    Rational r_value = 0;
    for (const auto& [N, c] : coeff.terms()) r_value += Rational(c) * weighted_binomial_coefficient(N, omega, exps);
    if (r_value == 0) continue;
    std::vector<std::pair<std::pair<int, int>, int>> letters;  // ((r, c), count)
    {
      std::map<std::pair<int, int>, int> bag;
      for (const auto& [c, p] : key.components())
        for (int r : p.parts()) ++bag[{r, c}];
      letters.assign(bag.begin(), bag.end());
    }
    std::vector<int> left(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) left[i] = letters[i].second;
    std::map<std::pair<std::size_t, std::vector<int>>, Rational> memo;
    // Each box takes at most one letter; identical letters are not distinguished.
    std::function<Rational(std::size_t)> assign = [&](std::size_t b) -> Rational {
      bool done = std::all_of(left.begin(), left.end(), [](int x) { return x == 0; });
      if (done) return 1;
      if (b == boxes.size()) return 0;
      auto memo_key = std::make_pair(b, left);
      if (auto it = memo.find(memo_key); it != memo.end()) return it->second;
      Rational v = assign(b + 1);
      const auto& [u, kappa] = boxes[b];
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (left[i] == 0) continue;
        const auto& [r, c] = letters[i].first;
        Rational x = omega[u][c];
        for (int e = 0; e < r; ++e) x *= kappa;
        if (x == 0) continue;
        --left[i];
        v += x * assign(b + 1);
        ++left[i];
      }
      memo.emplace(std::move(memo_key), v);
      return v;
    };
    total += r_value * assign(0);
  }
  return total;
}

namespace {

const FHAlgebra& trivial_algebra() {
  static const FHAlgebra fh(builtin_group("trivial"));
  return fh;
}

}  // namespace

BigInt sym_central_character_content(const Partition& lambda, const Partition& mu_red, int n) {
  if (lambda.size() != n) fail(ErrorCode::InvalidParameter, "lambda must be a partition of n");
  if (mu_red.size() + mu_red.length() > n) fail(ErrorCode::InvalidParameter, "class does not fit in S_n");
  const auto& fh = trivial_algebra();
  Rational v = evaluate_at_contents(fh.char_sym_fn(Multipartition::concentrated(0, mu_red)),
                                    Multipartition::concentrated(0, lambda), fh.group());
  if (!is_integer(v)) fail(ErrorCode::Validation, "non-integral symmetric group central character");
  return numerator(v);
}

Rational wreath_character(const Multipartition& lambda, const Multipartition& type, const Wreath& w, int max_n) {
  const GroupData& g = w.group();
  const auto& irr = g.irreps();
  const int n = lambda.size();
  if (type.size() != n) fail(ErrorCode::InvalidParameter, "class and irreducible have different degrees");
  if (n > max_n) fail(ErrorCode::ResourceLimit, "induced character oracle is capped at n = " + std::to_string(max_n));
  for (const auto& [u, p] : lambda.components())
    if (u < 0 || u >= static_cast<int>(irr.size())) fail(ErrorCode::InvalidParameter, "irrep index out of range");
  // Young subgroup H: consecutive slot blocks, one per irrep.
  std::vector<int> block_of(n), start(irr.size() + 1, 0);
  for (std::size_t u = 0; u < irr.size(); ++u) {
    int tau = lambda[static_cast<int>(u)].size();
    start[u + 1] = start[u] + tau;
    for (int i = start[u]; i < start[u + 1]; ++i) block_of[i] = static_cast<int>(u);
  }
  BigInt h_order = 1;
  for (std::size_t u = 0; u < irr.size(); ++u) {
    int tau = start[u + 1] - start[u];
    h_order *= factorial(tau);
    for (int i = 0; i < tau; ++i) h_order *= g.order();
  }
  const WreathElement a = w.representative(type, n);
  Rational total = 0;
  w.for_each_element(n, [&](const WreathElement& x) {
    WreathElement y = w.multiply(w.multiply(x, a), w.inverse(x));
    for (int i = 0; i < n; ++i)
      if (block_of[y.perm[i]] != block_of[i]) return;
    Rational value = 1;
    for (std::size_t u = 0; u < irr.size() && value != 0; ++u) {
      int tau = start[u + 1] - start[u];
      if (tau == 0) continue;
      std::vector<int> colors(tau), perm(tau);
      for (int i = 0; i < tau; ++i) {
        colors[i] = y.color[start[u] + i];
        perm[i] = y.perm[start[u] + i] - start[u];
      }
      Multipartition cycles = w.cycle_type(make_element(colors, perm), tau);
      std::vector<int> lengths;
      for (const auto& [c, p] : cycles.components())
        for (int len : p.parts()) {
          value *= irr[u].values[c];
          lengths.push_back(len);
        }
      value *= Rational(mn_character(lambda[static_cast<int>(u)], Partition::from_unsorted(lengths)));
    }
    total += value;
  });
  return total / Rational(h_order);
}

Rational wreath_central_character_content(const Multipartition& lambda, const Multipartition& mu,
                                          const FHAlgebra& fh) {
  return evaluate_at_contents(fh.char_sym_fn(mu), lambda, fh.group());
}

namespace {

BlockPartition group_by(int n, int p, const std::vector<Multipartition>& labels,
                        const std::function<std::vector<std::string>(const Multipartition&)>& key) {
  std::map<std::vector<std::string>, std::vector<Multipartition>> groups;
  for (const auto& lambda : labels) groups[key(lambda)].push_back(lambda);
  BlockPartition out{n, p, {}};
  for (auto& [k, v] : groups) {
    std::sort(v.begin(), v.end());
    out.blocks.push_back(std::move(v));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

void check_prime(int p) {
  if (p < 2) fail(ErrorCode::InvalidParameter, "p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(ErrorCode::InvalidParameter, "p must be prime");
}

}  // namespace

BlockPartition nakayama_blocks(int n, int p) {
  check_prime(p);
  if (n < 0) fail(ErrorCode::InvalidParameter, "n must be non-negative");
  std::vector<Multipartition> labels;
  for (const auto& lambda : partitions_of(n)) labels.push_back(Multipartition::concentrated(0, lambda));
  return group_by(n, p, labels, [p](const Multipartition& m) {
    return std::vector<std::string>{to_string(p_core(m[0], p))};
  });
}

BlockPartition wreath_blocks(const GroupData& g, int n, int p) {
  check_prime(p);
  if (n < 0) fail(ErrorCode::InvalidParameter, "n must be non-negative");
  const auto gamma_blocks = p_blocks(g, p);
  return group_by(n, p, multipartitions_of(n, g.irrep_count()), [&](const Multipartition& m) {
    std::vector<std::string> key;
    for (const auto& block : gamma_blocks) {
      int total = 0;
      for (int chi : block) total += m[chi].size();
      key.push_back(std::to_string(total));
      if (block.size() == 1) key.push_back(to_string(p_core(m[block.front()], p)));
    }
    return key;
  });
}

BlockPartition congruence_blocks(const FHAlgebra& fh, int n, int p) {
  check_prime(p);
  if (n < 0) fail(ErrorCode::InvalidParameter, "n must be non-negative");
  const GroupData& g = fh.group();
  std::vector<Multipartition> classes;
  for (const auto& type : multipartitions_of(n, g.class_count())) classes.push_back(partially_reduce(type));
  return group_by(n, p, multipartitions_of(n, g.irrep_count()), [&](const Multipartition& lambda) {
    std::vector<std::string> key;
    for (const auto& mu : classes) {
      Rational w = wreath_central_character_content(lambda, mu, fh);
      if (!is_integer(w)) fail(ErrorCode::Validation, "non-integral central character on " + to_string(lambda));
      key.push_back(std::to_string(mod_p(numerator(w), p)));
    }
    return key;
  });
}

BlockReport cross_validate_blocks(const FHAlgebra& fh, int n, int p) {
  BlockReport r;
  r.predicted = wreath_blocks(fh.group(), n, p);
  r.observed = congruence_blocks(fh, n, p);
  r.agrees = r.predicted == r.observed;
  // A label is a discrepancy when its two blocks differ.
  auto block_of = [](const BlockPartition& b) {
    std::map<Multipartition, const std::vector<Multipartition>*> at;
    for (const auto& block : b.blocks)
      for (const auto& m : block) at[m] = &block;
    return at;
  };
  auto pa = block_of(r.predicted), ob = block_of(r.observed);
  for (const auto& [m, block] : pa)
    if (*block != *ob.at(m)) r.discrepancies.push_back(m);
  return r;
}

std::string to_string(const BlockPartition& b, bool short_form) {
  std::string s;
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    s += "block " + std::to_string(i + 1) + ":";
    for (std::size_t j = 0; j < b.blocks[i].size(); ++j) s += (j ? ", " : " ") + to_string(b.blocks[i][j], short_form);
    s += "\n";
  }
  return s;
}

}  // namespace wfh
