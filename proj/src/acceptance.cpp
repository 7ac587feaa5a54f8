#include "wfh/acceptance.hpp"

#include "wfh/characters.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace wfh {

namespace {

// Every comparison below is exact: integers, rationals or F_p elements.
struct Check {
  bool ok = true;
  int count = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
  CriterionResult result(int id) const {
    return {id, criterion_name(id), ok, ok ? std::to_string(count) + " exact checks" : first_failure, 0};
  }
};

Multipartition sym_type(std::vector<int> parts) { return Multipartition::concentrated(0, Partition::from_unsorted(std::move(parts))); }

Multipartition ones(int n) { return sym_type(std::vector<int>(n, 1)); }

CriterionResult centre_product_sn(int id) {
  Check check;
  Wreath sn(builtin_group("trivial"));
  for (int n = 4; n <= 6; ++n) {
    std::vector<int> t(n - 2, 1), dt(n - 4, 1), c3(n - 3, 1);
    t.insert(t.begin(), 2);
    dt.insert(dt.begin(), {2, 2});
    c3.insert(c3.begin(), 3);
    CentreElement expected(n);
    expected.add(sym_type(dt), 2);
    expected.add(sym_type(c3), 3);
    expected.add(ones(n), binomial(BigInt(n), 2));
    CentreElement z = sn.centre_product(sym_type(t), sym_type(t), n);
    check.expect(z == expected, "n=" + std::to_string(n) + ": " + to_string(z, true));
    AlgebraElement x = sn.class_sum(sym_type(t), n);
    check.expect(sn.to_centre(sn.multiply(x, x)) == expected, "group-algebra square differs at n=" + std::to_string(n));
  }
  return check.result(id);
}

CriterionResult structure_polys(int id) {
  Check check;
  FHAlgebra fh(builtin_group("trivial"));
  auto one = parse_multipartition("(1)");
  auto expect = [&](const char* lambda, IntValuedPoly want) {
    auto got = fh.structure_poly(one, one, parse_multipartition(lambda));
    check.expect(got == want, std::string("phi[(1);(1);") + lambda + "] = " + to_string(got));
  };
  expect("()", IntValuedPoly::binomial_basis(2));
  expect("(2)", IntValuedPoly::constant(3));
  expect("(1,1)", IntValuedPoly::constant(2));
  return check.result(id);
}

CriterionResult character_sym_fns(int id) {
  Check check;
  FHAlgebra fh(builtin_group("trivial"));
  using Terms = std::map<std::pair<Partition, int>, BigInt>;
  const Partition e11{1, 1}, e2{2}, e1{1}, none{};
  const std::vector<std::pair<const char*, Terms>> cases = {
      {"(1)", {{{e1, 0}, 1}}},
      {"(2)", {{{e11, 0}, 1}, {{e2, 0}, -2}, {{none, 2}, -1}}},
      {"(1,1)", {{{e2, 0}, 3}, {{e11, 0}, -1}, {{none, 2}, 1}}},
  };
  for (const auto& [mu, want] : cases) {
    TensorElement f = fh.char_sym_fn(parse_multipartition(mu));
    check.expect(elementary_terms(f) == want, std::string("f") + mu + " = " + to_string_elementary(f));
    check.expect(fh.psi(f) == FHElement::basis(parse_multipartition(mu)), std::string("psi(f") + mu + ") != K");
  }
  return check.result(id);
}

CriterionResult jucys(int id) {
  Check check;
  Wreath sn(builtin_group("trivial"));
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= 3; ++r) {
      CentreElement expected(n);
      for (const auto& mu : partitions_of(r))
        if (auto type = unreduce_cycle_type(mu, n)) expected.add(Multipartition::concentrated(0, *type), 1);
      AlgebraElement e = sn.evaluate_weighted_monomial(ones(r), n);
      check.expect(sn.to_centre(e) == expected, "e" + std::to_string(r) + " at n=" + std::to_string(n));
    }
  return check.result(id);
}

CriterionResult murphy(int id) {
  Check check;
  Wreath sn(builtin_group("trivial"));
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 3; ++k)
      for (const auto& mu : partitions_of(k)) {
        CentreElement z = sn.to_centre(sn.evaluate_weighted_monomial(Multipartition::concentrated(0, mu), n));
        auto leading = unreduce_cycle_type(mu, n);
        std::string where = "m" + to_string(mu) + " at n=" + std::to_string(n);
        if (leading) check.expect(z.coefficient(Multipartition::concentrated(0, *leading)) == 1, where + ": leading coefficient");
        for (const auto& [type, c] : z.terms()) {
          Partition nu = reduce_cycle_type(type[0]);
          if (leading && type[0] == *leading) continue;
          bool lower = nu.size() < mu.size() || (nu.size() == mu.size() && nu.length() < mu.length());
          check.expect(lower, where + ": term " + to_string(nu) + " not lower");
        }
      }
  return check.result(id);
}

CriterionResult content_vs_mn(int id) {
  Check check;
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      BigInt dim = mn_character(lambda, ones(n)[0]);
      for (const auto& type : partitions_of(n)) {
        Partition red = reduce_cycle_type(type);
        Rational want = Rational(sym_class_size(type, n) * mn_character(lambda, type)) / Rational(dim);
        check.expect(Rational(sym_central_character_content(lambda, red, n)) == want,
                     "lambda=" + to_string(lambda) + " class=" + to_string(type));
      }
    }
  return check.result(id);
}

CriterionResult nakayama(int id) {
  Check check;
  const FHAlgebra fh(builtin_group("trivial"));
  for (int p : {2, 3})
    for (int n = 1; n <= 6; ++n) {
      BlockPartition cores = nakayama_blocks(n, p);
      // Congruence grouping from MN values.
      std::map<std::vector<std::int64_t>, std::vector<Multipartition>> groups;
      for (const auto& lambda : partitions_of(n)) {
        BigInt dim = mn_character(lambda, ones(n)[0]);
        std::vector<std::int64_t> key;
        for (const auto& type : partitions_of(n)) {
          Rational w = Rational(sym_class_size(type, n) * mn_character(lambda, type)) / Rational(dim);
          key.push_back(mod_p(numerator(w), p));
        }
        groups[key].push_back(Multipartition::concentrated(0, lambda));
      }
      BlockPartition by_mn{n, p, {}};
      for (auto& [k, v] : groups) {
        std::sort(v.begin(), v.end());
        by_mn.blocks.push_back(v);
      }
      std::sort(by_mn.blocks.begin(), by_mn.blocks.end());
      std::string where = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      check.expect(cores == by_mn, where + ": p-cores vs MN congruence");
      check.expect(cores == congruence_blocks(fh, n, p), where + ": p-cores vs content congruence");
    }
  BlockPartition b = nakayama_blocks(3, 2);
  std::vector<std::vector<Multipartition>> want = {{sym_type({3}), sym_type({1, 1, 1})}, {sym_type({2, 1})}};
  std::sort(want.begin(), want.end());
  check.expect(b.blocks == want, "n=3 p=2 instance: " + to_string(b, true));
  return check.result(id);
}

CriterionResult c2_indecomposables(int id) {
  Check check;
  const GroupData g = builtin_group("C2");
  auto m = [](const char* s) { return parse_multipartition(s); };
  auto basis_sum = [&](std::vector<std::pair<const char*, int>> terms) {
    WeightedSymFn f;
    for (const auto& [s, c] : terms) f.add(m(s), c);
    return f;
  };
  check.expect(wsf_basis_product(m("[(1)@0]"), m("[(1)@0]"), g) == basis_sum({{"[(2)@0]", 1}, {"[(1,1)@0]", 2}}),
               "m_(1)_1^2");
  check.expect(wsf_basis_product(m("[(1)@0]"), m("[(1)@1]"), g) == basis_sum({{"[(2)@1]", 1}, {"[(1)@0;(1)@1]", 1}}),
               "m_(1)_1 m_(1)_g");
  check.expect(wsf_basis_product(m("[(1)@1]"), m("[(1)@1]"), g) == basis_sum({{"[(2)@0]", 1}, {"[(1,1)@1]", 2}}),
               "m_(1)_g^2");
  Indecomposables d = indecomposables(g, 2);
  check.expect(d.basis_size == 5 && d.free_rank == 2 && d.torsion == std::vector<BigInt>{2},
               "degree-2 indecomposables: free rank " + std::to_string(d.free_rank) + ", torsion count " +
                   std::to_string(d.torsion.size()));
  return check.result(id);
}

std::vector<Multipartition> wsf_basis_upto(int d, int l) {
  std::vector<Multipartition> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& m : multipartitions_of(k, l)) out.push_back(m);
  return out;
}

CriterionResult hopf(int id) {
  Check check;
  for (const char* name : {"trivial", "C2"}) {
    const GroupData g = builtin_group(name);
    auto basis = wsf_basis_upto(4, g.class_count());
    for (const auto& lambda : basis) {
      std::string where = std::string(name) + " m" + to_string(lambda);
      TensorPairSum delta = coproduct(lambda);
      // (Δ⊗id)Δ = (id⊗Δ)Δ, compared as triple sums.
      std::map<std::tuple<Multipartition, Multipartition, Multipartition>, BigInt> left, right;
      for (const auto& [pair, c] : delta) {
        for (const auto& [inner, d] : coproduct(pair.first)) left[{inner.first, inner.second, pair.second}] += c * d;
        for (const auto& [inner, d] : coproduct(pair.second)) right[{pair.first, inner.first, inner.second}] += c * d;
      }
      check.expect(left == right, where + ": coassociativity");
      // (ε⊗id)Δ = id = (id⊗ε)Δ.
      WeightedSymFn via_left, via_right;
      for (const auto& [pair, c] : delta) {
        if (pair.first.empty()) via_left.add(pair.second, c);
        if (pair.second.empty()) via_right.add(pair.first, c);
      }
      check.expect(via_left == WeightedSymFn::basis(lambda) && via_right == WeightedSymFn::basis(lambda), where + ": counit");
      // m(S⊗id)Δ = ηε.
      WeightedSymFn s;
      for (const auto& [pair, c] : delta)
        s += wsf_multiply(antipode(pair.first, g), WeightedSymFn::basis(pair.second), g).scaled(c);
      check.expect(s == (lambda.empty() ? WeightedSymFn::one() : WeightedSymFn()), where + ": antipode");
    }
    for (const auto& a : basis)
      for (const auto& b : basis) {
        if (a.size() + b.size() > 4 || b < a) continue;
        TensorPairSum lhs = coproduct(wsf_basis_product(a, b, g));
        TensorPairSum rhs = tensor_multiply(coproduct(a), coproduct(b), g);
        check.expect(lhs == rhs, std::string(name) + ": Δ(m" + to_string(a) + " m" + to_string(b) + ")");
      }
  }
  return check.result(id);
}

std::vector<ExponentVector> exponents_upto(int d, int l) {
  std::vector<ExponentVector> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& N : exponent_vectors_of(k, l)) out.push_back(N);
  return out;
}

CriterionResult rgamma_suite(int id) {
  Check check;
  for (const char* name : {"C2", "S3"}) {
    const GroupData g = builtin_group(name);
    const int l = g.class_count();
    auto basis = exponents_upto(3, l);
    for (const auto& N : basis)
      for (const auto& M : basis) {
        check.expect(rg_basis_product(g, N, M) == rg_basis_product(g, M, N),
                     std::string(name) + ": commutativity " + to_string_b(N) + to_string_b(M));
        if (M < N) continue;
        for (const auto& K : basis) {
          if (K < M) continue;
          RGammaElement left = rg_multiply(rg_basis_product(g, N, M), RGammaElement::basis(K), g);
          RGammaElement right = rg_multiply(RGammaElement::basis(N), rg_basis_product(g, M, K), g);
          check.expect(left == right,
                       std::string(name) + ": associativity " + to_string_b(N) + to_string_b(M) + to_string_b(K));
        }
      }
    Wreath w(g);
    auto small = exponents_upto(2, l);
    for (int n = 0; n <= 4; ++n)
      for (const auto& N : small)
        for (const auto& M : small) {
          if (M < N) continue;
          CentreElement lhs = w.centre_multiply(ev_r(N, n), ev_r(M, n));
          check.expect(lhs == ev_r(rg_basis_product(g, N, M), n),
                       std::string(name) + ": ev_r product " + to_string_b(N) + to_string_b(M) + " n=" + std::to_string(n));
        }
    auto omega = omega_expand(g, 3);
    for (const auto& N : basis) {
      TPolynomial want = TPolynomial::constant(1, l);
      for (int c = 0; c < l; ++c)
        for (int k = 1; k <= N[c]; ++k) want = want * TPolynomial::variable(c, l).scaled(Rational(1, k));
      check.expect(omega.at(N).top_part() == want, std::string(name) + ": leading term of " + to_string_b(N));
    }
  }
  return check.result(id);
}

CriterionResult psi_triangular(int id) {
  Check check;
  FHAlgebra fh(builtin_group("C2"));
  const int l = fh.group().class_count();
  auto key = [](const Multipartition& nu) {
    return std::make_pair(transposition_degree(nu), moving_degree(nu));
  };
  for (const auto& mu : wsf_basis_upto(3, l)) {
    FHElement image = fh.psi_m(mu);
    Multipartition top = leading_label(mu);
    check.expect(image.coefficient(top) == IntValuedPoly::constant(1), "psi_m(m" + to_string(mu) + ") leading coefficient");
    for (const auto& [nu, p] : image.terms())
      if (nu != top) check.expect(key(nu) < key(top), "psi_m(m" + to_string(mu) + ") term " + to_string(nu) + " not lower");
  }
  // {K_hat(mu) psi_r(M) : M(identity) = 0}, |mu| + |M| <= 3.
  std::set<Multipartition> leads;
  auto full_key = [](const Multipartition& nu) {
    return std::make_tuple(transposition_degree(nu), moving_degree(nu), nu.affected());
  };
  for (const auto& mu : wsf_basis_upto(3, l))
    for (const auto& M : exponents_upto(3 - mu.size(), l)) {
      if (M[0] != 0) continue;
      FHElement product = fh.multiply(FHElement::basis(leading_label(mu)), fh.psi_r(M));
      Multipartition lead = leading_label(mu);
      for (int c = 1; c < l; ++c)
        if (M[c] > 0) lead = multipartition_union(lead, Multipartition::concentrated(c, Partition(std::vector<int>(M[c], 1))));
      std::string where = "K" + to_string(leading_label(mu)) + " psi_r" + to_string_b(M);
      check.expect(product.coefficient(lead) == IntValuedPoly::constant(1), where + ": leading coefficient");
      for (const auto& [nu, p] : product.terms())
        if (nu != lead) check.expect(full_key(nu) < full_key(lead), where + ": term " + to_string(nu) + " not lower");
      check.expect(leads.insert(lead).second, where + ": repeated leading label");
    }
  return check.result(id);
}

CriterionResult wreath_content(int id) {
  Check check;
  for (const char* name : {"C2", "S3"}) {
    FHAlgebra fh(builtin_group(name));
    const GroupData& g = fh.group();
    for (int n = 0; n <= 3; ++n)
      for (const auto& lambda : multipartitions_of(n, g.irrep_count())) {
        Rational dim = wreath_character(lambda, n ? ones(n) : Multipartition(), fh.wreath());
        for (const auto& type : multipartitions_of(n, g.class_count())) {
          Rational chi = wreath_character(lambda, type, fh.wreath());
          Rational want = Rational(fh.wreath().class_size(type, n)) * chi / dim;
          Rational got = wreath_central_character_content(lambda, partially_reduce(type), fh);
          check.expect(got == want, std::string(name) + " lambda=" + to_string(lambda) + " class=" + to_string(type));
        }
      }
  }
  return check.result(id);
}

CriterionResult wreath_nakayama(int id) {
  Check check;
  FHAlgebra c2(builtin_group("C2"));
  for (int n = 1; n <= 4; ++n) {
    BlockReport r = cross_validate_blocks(c2, n, 2);
    check.expect(r.predicted.blocks.size() == 1 && r.agrees, "C2 n=" + std::to_string(n) + " p=2");
  }
  FHAlgebra s3(builtin_group("S3"));
  for (int p : {2, 3}) check.expect(cross_validate_blocks(s3, 2, p).agrees, "S3 n=2 p=" + std::to_string(p));
  const GroupData trivial = builtin_group("trivial");
  for (int p : {2, 3})
    for (int n = 1; n <= 5; ++n)
      check.expect(wreath_blocks(trivial, n, p) == nakayama_blocks(n, p),
                   "trivial n=" + std::to_string(n) + " p=" + std::to_string(p));
  return check.result(id);
}

CriterionResult frobenius(int id) {
  Check check;
  for (const char* name : {"C2", "S3"}) {
    const GroupData g = builtin_group(name);
    const int l = g.class_count();
    for (int p : {2, 3})
      for (int r = 0; r <= 1; ++r) {
        // Every q in F_p^l.
        std::vector<std::int64_t> q(l, 0);
        while (true) {
          RGammaElement lhs = rg_power_mod_p(b_qr_mod_p(q, r, p), p, p, g);
          RGammaElement rhs = b_qr_mod_p(class_power_mod_p(g, q, p), r, p);
          std::string qs;
          for (auto x : q) qs += std::to_string(x);
          check.expect(lhs == rhs, std::string(name) + " p=" + std::to_string(p) + " r=" + std::to_string(r) + " q=" + qs);
          int i = 0;
          while (i < l && ++q[i] == p) q[i++] = 0;
          if (i == l) break;
        }
      }
  }
  return check.result(id);
}

std::int64_t lucas_free_binomial(const std::vector<int>& digits, int p, std::int64_t k) {
  BigInt t = 0, place = 1;
  for (int d : digits) {
    t += place * d;
    place *= p;
  }
  return mod_p(binomial(t, static_cast<int>(k)), p);
}

CriterionResult modular_homs(int id) {
  Check check;
  const GroupData trivial = builtin_group("trivial");
  for (int p : {2, 3})
    for (int r = 0; r <= 2; ++r) {
      int k = 1;
      for (int i = 0; i < r; ++i) k *= p;
      // All three-digit parameters.
      for (int t = 0; t < p * p * p; ++t) {
        std::vector<int> digits{t % p, (t / p) % p, t / (p * p)};
        std::int64_t value = modular_hom(trivial, p, {digits}, ExponentVector{k});
        std::string where = "p=" + std::to_string(p) + " r=" + std::to_string(r) + " t=" + std::to_string(t);
        check.expect(value == digits[r], where + ": digit");
        check.expect(value == lucas_free_binomial(digits, p, k), where + ": exact binomial");
      }
    }
  // Multiplicativity on basis pairs.
  for (const char* name : {"trivial", "C2", "S3"}) {
    const GroupData g = builtin_group(name);
    for (int p : {2, 3}) {
      const int blocks = static_cast<int>(p_blocks(g, p).size());
      std::vector<std::vector<int>> digits(blocks);
      for (int u = 0; u < blocks; ++u) digits[u] = {(u + 1) % p, (2 * u + 1) % p, 1};
      auto basis = exponents_upto(2, g.class_count());
      for (const auto& N : basis)
        for (const auto& M : basis) {
          std::int64_t lhs = modular_hom(g, p, digits, N) * modular_hom(g, p, digits, M) % p;
          std::int64_t rhs = modular_hom(g, p, digits, rg_basis_product(g, N, M));
          check.expect(lhs == rhs, std::string(name) + " p=" + std::to_string(p) + " " + to_string_b(N) + to_string_b(M));
        }
    }
  }
  return check.result(id);
}

CriterionResult validation(int id) {
  Check check;
  for (const auto& name : builtin_group_names()) {
    const GroupData g = builtin_group(name);
    if (!g.has_char_table()) continue;
    const auto& irr = g.irreps();
    for (std::size_t a = 0; a < irr.size(); ++a) {
      for (std::size_t b = 0; b < irr.size(); ++b) {
        Rational row = 0;
        for (int c = 0; c < g.class_count(); ++c) row += Rational(g.class_size(c)) * irr[a].values[c] * irr[b].values[c];
        check.expect(row == (a == b ? Rational(g.order()) : Rational(0)), name + ": row orthogonality");
      }
    }
    for (int c = 0; c < g.class_count(); ++c)
      for (int d = 0; d < g.class_count(); ++d) {
        Rational col = 0;
        for (const auto& chi : irr) col += chi.values[c] * chi.values[d];
        check.expect(col == (c == d ? Rational(g.order(), g.class_size(c)) : Rational(0)), name + ": column orthogonality");
      }
  }
  auto rejected = [](const nlohmann::json& doc) {
    try {
      load_group(doc);
    } catch (const Error& e) {
      return e.code() == ErrorCode::Validation;
    }
    return false;
  };
  using nlohmann::json;
  check.expect(!rejected(json{{"name", "ok"},
                              {"mult", {{0, 1}, {1, 0}}},
                              {"char_table", {{"irreps", {{{"name", "a"}, {"dim", 1}, {"values", {"1", "1"}}},
                                                          {{"name", "b"}, {"dim", 1}, {"values", {"1", "-1"}}}}}}}}),
               "valid C2 document rejected");
  check.expect(rejected(json{{"name", "bad"}, {"mult", {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}}}),
               "non-associative table accepted");
  check.expect(rejected(json{{"name", "bad"}, {"mult", {{1, 0}, {0, 1}}}}), "table without identity accepted");
  check.expect(rejected(json{{"name", "bad"}, {"mult", {{0, 1}, {1, 1}}}}), "non-invertible element accepted");
  check.expect(rejected(json{{"name", "bad"}, {"mult", {{0, 1}, {1, 2}}}}), "out-of-range entry accepted");
  check.expect(rejected(json{{"name", "bad"},
                             {"mult", {{0, 1}, {1, 0}}},
                             {"char_table", {{"irreps", {{{"name", "a"}, {"dim", 1}, {"values", {"1", "1"}}},
                                                         {{"name", "b"}, {"dim", 1}, {"values", {"1", "1"}}}}}}}}),
               "non-orthogonal character table accepted");
  return check.result(id);
}

using Runner = CriterionResult (*)(int);

const std::vector<std::pair<std::string, Runner>>& criteria() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"transposition class square in S_4..S_6", centre_product_sn},
      {"structure polynomials for K_(1)^2", structure_polys},
      {"character symmetric functions f_(1), f_(2), f_(1,1)", character_sym_fns},
      {"elementary functions at JM elements", jucys},
      {"monomial leading terms at JM elements", murphy},
      {"content evaluation vs Murnaghan-Nakayama", content_vs_mn},
      {"p-cores vs central-character congruence", nakayama},
      {"C2 degree-2 products and indecomposables", c2_indecomposables},
      {"Hopf identities on weighted symmetric functions", hopf},
      {"R_Gamma ring laws, ev_r and leading terms", rgamma_suite},
      {"Psi triangularity and freeness for C2", psi_triangular},
      {"wreath content evaluation vs induced characters", wreath_content},
      {"wreath p-blocks", wreath_nakayama},
      {"Frobenius identity for B_{q,r} mod p", frobenius},
      {"modular homomorphisms and p-adic digits", modular_homs},
      {"character table and group axiom validation", validation},
  };
  return table;
}

}  // namespace

std::string criterion_name(int id) {
  if (id < 1 || id > kCriterionCount) fail(ErrorCode::InvalidParameter, "no criterion " + std::to_string(id));
  return criteria()[id - 1].first;
}

CriterionResult run_criterion(int id) {
  criterion_name(id);
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = criteria()[id - 1].second(id);
  } catch (const Error& e) {
    r = {id, criterion_name(id), false, std::string(error_code_name(e.code())) + ": " + e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  if (ids.empty())
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  else
    for (int id : ids) out.push_back(run_criterion(id));
  return out;
}

}  // namespace wfh
