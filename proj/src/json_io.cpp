#include "wfh/json_io.hpp"

namespace wfh {

namespace {

BigInt big(const json& j) {
  if (!j.is_string()) fail(ErrorCode::Validation, "expected an integer string");
  try {
    return BigInt(j.get<std::string>());
  } catch (const std::exception&) {
    fail(ErrorCode::Validation, "bad integer: " + j.get<std::string>());
  }
}

Multipartition label(const json& j) {
  if (!j.is_string()) fail(ErrorCode::Validation, "expected a label string");
  try {
    return parse_multipartition(j.get<std::string>());
  } catch (const Error& e) {
    fail(ErrorCode::Validation, e.what());
  }
}

const json& list(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Validation, "expected an array");
  return j;
}

ExponentVector exponents(const json& j) {
  auto N = list(j).get<ExponentVector>();
  for (int v : N)
    if (v < 0) fail(ErrorCode::Validation, "negative exponent");
  return N;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::Validation, std::string("malformed document: ") + e.what());
  }
}

json big_list(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::vector<BigInt> decode_big_list(const json& j) {
  std::vector<BigInt> v;
  for (const auto& x : j) v.push_back(big(x));
  return v;
}

}  // namespace

json encode(const IntValuedPoly& p) { return big_list(p.coeffs()); }

IntValuedPoly decode_intpoly(const json& j) {
  return guarded([&] {
    if (!j.is_array()) fail(ErrorCode::Validation, "polynomial must be an array of binomial-basis coefficients");
    return IntValuedPoly(decode_big_list(j));
  });
}

json encode(const RGammaElement& a) {
  json out = json::array();
  for (const auto& [N, c] : a.terms()) out.push_back({{"B", N}, {"coeff", c.str()}});
  return out;
}

RGammaElement decode_rgamma(const json& j) {
  return guarded([&] {
    RGammaElement a;
    if (!j.is_array()) fail(ErrorCode::Validation, "R element must be an array");
    for (const auto& t : list(j)) a.add(exponents(t.at("B")), big(t.at("coeff")));
    return a;
  });
}

json encode(const WeightedSymFn& f) {
  json out = json::array();
  for (const auto& [lambda, c] : f.terms()) out.push_back({{"m", to_string(lambda)}, {"coeff", c.str()}});
  return out;
}

WeightedSymFn decode_wsf(const json& j) {
  return guarded([&] {
    WeightedSymFn f;
    for (const auto& t : list(j)) f.add(label(t.at("m")), big(t.at("coeff")));
    return f;
  });
}

json encode(const CentreElement& z) {
  json terms = json::array();
  for (const auto& [type, c] : z.terms()) terms.push_back({{"X", to_string(type)}, {"coeff", c.str()}});
  return {{"n", z.degree()}, {"terms", terms}};
}

CentreElement decode_centre(const json& j) {
  return guarded([&] {
    CentreElement z(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) z.add(label(t.at("X")), big(t.at("coeff")));
    return z;
  });
}

json encode(const FHElement& a) {
  json out = json::array();
  for (const auto& [nu, p] : a.terms()) out.push_back({{"K", to_string(nu)}, {"poly", encode(p)}});
  return out;
}

FHElement decode_fh(const json& j) {
  return guarded([&] {
    FHElement a;
    for (const auto& t : list(j)) a.add(label(t.at("K")), decode_intpoly(t.at("poly")));
    return a;
  });
}

json encode(const TensorElement& x) {
  json out = json::array();
  for (const auto& [lambda, a] : x.terms()) out.push_back({{"m", to_string(lambda)}, {"coeff", encode(a)}});
  return out;
}

TensorElement decode_tensor(const json& j) {
  return guarded([&] {
    TensorElement x;
    for (const auto& t : list(j)) x.add(label(t.at("m")), decode_rgamma(t.at("coeff")));
    return x;
  });
}

json encode(const BlockPartition& b) {
  json blocks = json::array();
  for (const auto& block : b.blocks) {
    json labels = json::array();
    for (const auto& m : block) labels.push_back(to_string(m));
    blocks.push_back(labels);
  }
  return {{"n", b.n}, {"p", b.p}, {"blocks", blocks}};
}

BlockPartition decode_blocks(const json& j) {
  return guarded([&] {
    BlockPartition b{j.at("n").get<int>(), j.at("p").get<int>(), {}};
    for (const auto& block : j.at("blocks")) {
      std::vector<Multipartition> labels;
      for (const auto& m : block) labels.push_back(label(m));
      b.blocks.push_back(std::move(labels));
    }
    return b;
  });
}

json encode(const BlockReport& r) {
  json discrepancies = json::array();
  for (const auto& m : r.discrepancies) discrepancies.push_back(to_string(m));
  json out = encode(r.predicted);
  out["method"] = "wreath-nakayama";
  out["agrees"] = r.agrees;
  out["congruence_blocks"] = encode(r.observed)["blocks"];
  out["discrepancies"] = discrepancies;
  return out;
}

BlockReport decode_block_report(const json& j) {
  return guarded([&] {
    BlockReport r;
    r.predicted = decode_blocks(j);
    r.observed = decode_blocks({{"n", j.at("n")}, {"p", j.at("p")}, {"blocks", j.at("congruence_blocks")}});
    r.agrees = j.at("agrees").get<bool>();
    for (const auto& m : j.at("discrepancies")) r.discrepancies.push_back(label(m));
    return r;
  });
}

json encode(const Indecomposables& d) {
  return {{"basis_size", d.basis_size},
          {"free_rank", d.free_rank},
          {"invariant_factors", big_list(d.invariant_factors)},
          {"torsion", big_list(d.torsion)}};
}

Indecomposables decode_indecomposables(const json& j) {
  return guarded([&] {
    Indecomposables d;
    d.basis_size = j.at("basis_size").get<int>();
    d.free_rank = j.at("free_rank").get<int>();
    d.invariant_factors = decode_big_list(j.at("invariant_factors"));
    d.torsion = decode_big_list(j.at("torsion"));
    return d;
  });
}

}  // namespace wfh
