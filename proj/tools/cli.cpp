#include "wfh/cli.hpp"

#include "wfh/acceptance.hpp"
#include "wfh/json_io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <sstream>

namespace wfh {

namespace {

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter:
      return kExitUsage;
    case ErrorCode::UnsupportedCharacterField:
      return kExitUnsupported;
    case ErrorCode::ResourceLimit:
      return kExitResource;
    case ErrorCode::DegreeCapExceeded:
      return kExitDegreeCap;
    case ErrorCode::Validation:
    case ErrorCode::NotCentral:
    case ErrorCode::Precision:
      return kExitValidation;
  }
  return kExitValidation;
}

// A label of size n is an unreduced cycle type; anything smaller is read as
// a partially-reduced label and completed with fixed points.
Multipartition class_at(const Multipartition& label, int n) {
  if (label.size() == n) return label;
  auto full = unreduce_partial(label, n);
  if (!full) fail(ErrorCode::InvalidParameter, "class " + to_string(label) + " does not fit in degree " + std::to_string(n));
  return *full;
}

bool trivial_only(const GroupData& g) { return g.class_count() == 1; }

struct Options {
  std::string group = "trivial";
  int n = 0;
  int p = 2;
  int maxdeg = 3;
  std::string mu, nu, lambda;
  std::string method = "content";
  std::string suite = "acceptance";
  bool validate = false;
  bool json = false;
  std::uint64_t max_enum = 0;
};

void print(std::ostream& out, const Options& o, const json& doc, const std::string& text) {
  if (o.json)
    out << doc.dump(2) << "\n";
  else
    out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

int group_info(const Options& o, std::ostream& out) {
  GroupData g = resolve_group(o.group);
  json doc = group_to_json(g);
  json classes = json::array();
  std::ostringstream text;
  text << g.name() << ": order " << g.order() << ", " << g.class_count() << " classes\n";
  for (int c = 0; c < g.class_count(); ++c) {
    classes.push_back({{"index", c}, {"size", g.class_size(c)}, {"elements", g.class_elements(c)}});
    text << "  class " << c << ": size " << g.class_size(c) << ", representative " << g.representative(c) << "\n";
  }
  doc["classes"] = classes;
  if (g.has_char_table()) {
    text << "characters:\n";
    for (std::size_t u = 0; u < g.irreps().size(); ++u) {
      const auto& ir = g.irreps()[u];
      text << "  " << u << " " << ir.name << ":";
      for (const auto& v : ir.values) text << " " << to_string(v);
      text << "\n";
    }
  } else {
    text << "no character table\n";
  }
  print(out, o, doc, text.str());
  return kExitOk;
}

int centre_mult(const Options& o, std::ostream& out) {
  Wreath w(resolve_group(o.group));
  Multipartition mu = class_at(parse_multipartition(o.mu), o.n);
  Multipartition nu = class_at(parse_multipartition(o.nu), o.n);
  for (const auto& m : {mu, nu})
    for (const auto& [c, p] : m.components())
      if (c >= w.class_count()) fail(ErrorCode::InvalidParameter, "class index out of range");
  CentreElement z = w.centre_product(mu, nu, o.n);
  bool short_form = trivial_only(w.group());
  json doc = encode(z);
  doc["text"] = to_string(z, short_form);
  print(out, o, doc, to_string(z, short_form));
  return kExitOk;
}

int struct_poly(const Options& o, std::ostream& out) {
  FHAlgebra fh(resolve_group(o.group));
  bool short_form = trivial_only(fh.group());
  Multipartition mu = parse_multipartition(o.mu), nu = parse_multipartition(o.nu);
  if (o.lambda.empty()) {
    FHElement product = fh.product_of_basis(mu, nu);
    std::string text = "K" + to_string(mu, short_form) + "*K" + to_string(nu, short_form) + " = " + to_string(product, short_form);
    print(out, o, {{"mu", to_string(mu)}, {"nu", to_string(nu)}, {"product", encode(product)}, {"text", text}}, text);
    return kExitOk;
  }
  Multipartition lambda = parse_multipartition(o.lambda);
  IntValuedPoly p = fh.structure_poly(mu, nu, lambda);
  std::string text = "φ[" + to_string(mu, short_form) + ";" + to_string(nu, short_form) + ";" +
                     to_string(lambda, short_form) + "] = " + to_string(p);
  print(out, o,
        {{"mu", to_string(mu)}, {"nu", to_string(nu)}, {"lambda", to_string(lambda)}, {"poly", encode(p)}, {"text", text}},
        text);
  return kExitOk;
}

int char_sym(const Options& o, std::ostream& out) {
  FHAlgebra fh(resolve_group(o.group));
  bool short_form = trivial_only(fh.group());
  Multipartition mu = parse_multipartition(o.mu);
  TensorElement f = fh.char_sym_fn(mu);
  std::string body = short_form ? to_string_elementary(f) : to_string(f, false);
  std::string text = "f[" + to_string(mu, short_form) + "] = " + body;
  json doc = {{"mu", to_string(mu)}, {"f", encode(f)}, {"text", text}};
  if (short_form) doc["elementary"] = body;
  print(out, o, doc, text);
  return kExitOk;
}

int central_char(const Options& o, std::ostream& out) {
  FHAlgebra fh(resolve_group(o.group));
  Multipartition lambda = parse_multipartition(o.lambda);
  if (lambda.size() != o.n) fail(ErrorCode::InvalidParameter, "lambda must have size n");
  Multipartition type = class_at(parse_multipartition(o.mu), o.n);
  Rational value;
  if (o.method == "content") {
    value = wreath_central_character_content(lambda, partially_reduce(type), fh);
  } else if (o.method == "bruteforce") {
    Rational dim = wreath_character(lambda, o.n ? class_at(Multipartition(), o.n) : Multipartition(), fh.wreath(),
                                    kMaxDegree);
    value = Rational(fh.wreath().class_size(type, o.n)) * wreath_character(lambda, type, fh.wreath(), kMaxDegree) / dim;
  } else {
    fail(ErrorCode::InvalidParameter, "method must be content or bruteforce");
  }
  print(out, o,
        {{"lambda", to_string(lambda)}, {"class", to_string(type)}, {"n", o.n}, {"method", o.method},
         {"value", to_string(value)}},
        to_string(value));
  return kExitOk;
}

int blocks(const Options& o, std::ostream& out) {
  GroupData g = resolve_group(o.group);
  bool short_form = trivial_only(g);
  if (!o.validate) {
    BlockPartition b = wreath_blocks(g, o.n, o.p);
    json doc = encode(b);
    doc["method"] = "wreath-nakayama";
    print(out, o, doc, to_string(b, short_form));
    return kExitOk;
  }
  FHAlgebra fh(std::move(g));
  BlockReport r = cross_validate_blocks(fh, o.n, o.p);
  std::string text = to_string(r.predicted, short_form) + (r.agrees ? "agrees with central-character congruence\n"
                                                                     : "DISAGREES with central-character congruence\n");
  for (const auto& m : r.discrepancies) text += "  discrepancy: " + to_string(m, short_form) + "\n";
  print(out, o, encode(r), text);
  return r.agrees ? kExitOk : kExitValidation;
}

int hopf_check(const Options& o, std::ostream& out) {
  GroupData g = resolve_group(o.group);
  if (o.maxdeg < 0) fail(ErrorCode::InvalidParameter, "maxdeg must be non-negative");
  std::vector<Multipartition> basis;
  for (int k = 0; k <= o.maxdeg; ++k)
    for (const auto& m : multipartitions_of(k, g.class_count())) basis.push_back(m);
  int checks = 0;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  };
  for (const auto& lambda : basis) {
    TensorPairSum delta = coproduct(lambda);
    std::map<std::tuple<Multipartition, Multipartition, Multipartition>, BigInt> left, right;
    WeightedSymFn counit_left, antipode_sum;
    for (const auto& [pair, c] : delta) {
      for (const auto& [inner, d] : coproduct(pair.first)) left[{inner.first, inner.second, pair.second}] += c * d;
      for (const auto& [inner, d] : coproduct(pair.second)) right[{pair.first, inner.first, inner.second}] += c * d;
      if (pair.first.empty()) counit_left.add(pair.second, c);
      antipode_sum += wsf_multiply(antipode(pair.first, g), WeightedSymFn::basis(pair.second), g).scaled(c);
    }
    expect(left == right, "coassociativity at m" + to_string(lambda));
    expect(counit_left == WeightedSymFn::basis(lambda), "counit at m" + to_string(lambda));
    expect(antipode_sum == (lambda.empty() ? WeightedSymFn::one() : WeightedSymFn()), "antipode at m" + to_string(lambda));
  }
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (a.size() + b.size() <= o.maxdeg && !(b < a))
        expect(coproduct(wsf_basis_product(a, b, g)) == tensor_multiply(coproduct(a), coproduct(b), g),
               "multiplicativity at m" + to_string(a) + " m" + to_string(b));
  std::ostringstream text;
  text << checks - failures.size() << "/" << checks << " Hopf identities hold up to degree " << o.maxdeg << "\n";
  for (const auto& f : failures) text << "  failed: " << f << "\n";
  print(out, o, {{"checks", checks}, {"failures", failures}, {"passed", failures.empty()}}, text.str());
  return failures.empty() ? kExitOk : kExitValidation;
}

int verify(const Options& o, std::ostream& out) {
  std::vector<int> ids;
  if (o.suite != "acceptance" && o.suite != "all") {
    std::stringstream ss(o.suite);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        int id = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        ids.push_back(id);
      } catch (const std::exception&) {
        fail(ErrorCode::InvalidParameter, "unknown suite '" + o.suite + "'");
      }
      criterion_name(ids.back());
    }
  }
  auto results = run_acceptance(ids);
  json doc = json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    doc.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text << "AC" << r.id << " " << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail << ")\n";
  }
  print(out, o, doc, text.str());
  return all ? kExitOk : kExitValidation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Farahat-Higman algebras of wreath products"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-enum", o.max_enum, "cap on brute-force enumeration (default WFH_MAX_ENUM or 10^7)");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "built-in group name or JSON group file");
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  auto* info = app.add_subcommand("group-info", "classes and character table of Γ");
  add_common(info);
  auto* cm = app.add_subcommand("centre-mult", "product of two class sums in the centre of Z[Γ≀S_n]");
  add_common(cm);
  cm->add_option("--n", o.n, "degree")->required();
  cm->add_option("--mu", o.mu, "class label")->required();
  cm->add_option("--nu", o.nu, "class label")->required();
  auto* sp = app.add_subcommand("struct-poly", "structure polynomial, or the whole product without --lambda");
  add_common(sp);
  sp->add_option("--mu", o.mu, "partially-reduced label")->required();
  sp->add_option("--nu", o.nu, "partially-reduced label")->required();
  sp->add_option("--lambda", o.lambda, "partially-reduced label");
  auto* cs = app.add_subcommand("char-sym", "character symmetric function of a class");
  add_common(cs);
  cs->add_option("--mu", o.mu, "partially-reduced label")->required();
  auto* cc = app.add_subcommand("central-char", "central character of a class sum on an irreducible");
  add_common(cc);
  cc->add_option("--n", o.n, "degree")->required();
  cc->add_option("--lambda", o.lambda, "irrep-indexed multipartition of n")->required();
  cc->add_option("--mu", o.mu, "class label")->required();
  cc->add_option("--method", o.method, "content or bruteforce")->check(CLI::IsMember({"content", "bruteforce"}));
  auto* bl = app.add_subcommand("blocks", "p-blocks of Γ≀S_n");
  add_common(bl);
  bl->add_option("--n", o.n, "degree")->required();
  bl->add_option("--p", o.p, "prime")->required();
  bl->add_flag("--validate", o.validate, "cross-check against central-character congruence");
  auto* hc = app.add_subcommand("hopf-check", "Hopf identities on weighted symmetric functions");
  add_common(hc);
  hc->add_option("--maxdeg", o.maxdeg, "largest degree checked");
  auto* vf = app.add_subcommand("verify", "run acceptance criteria");
  vf->add_option("--suite", o.suite, "acceptance, or comma-separated criterion numbers");
  vf->add_flag("--json", o.json, "machine-readable output");

  std::vector<std::string> argv_store{"wfh"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  // The cap applies to this invocation only.
  struct CapRestore {
    std::uint64_t saved = max_enumeration();
    ~CapRestore() { set_max_enumeration(saved); }
  } restore;
  try {
    if (o.max_enum > 0) set_max_enumeration(o.max_enum);
    if (info->parsed()) return group_info(o, out);
    if (cm->parsed()) return centre_mult(o, out);
    if (sp->parsed()) return struct_poly(o, out);
    if (cs->parsed()) return char_sym(o, out);
    if (cc->parsed()) return central_char(o, out);
    if (bl->parsed()) return blocks(o, out);
    if (hc->parsed()) return hopf_check(o, out);
    if (vf->parsed()) return verify(o, out);
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_status(e.code());
  }
  return kExitUsage;
}

}  // namespace wfh
