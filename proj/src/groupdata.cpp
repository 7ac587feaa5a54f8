#include "wfh/groupdata.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>

namespace wfh {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::vector<int>> permutation_table(int k, std::vector<std::vector<int>>& perms) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  perms.clear();
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> mult(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      mult[a][b] = index[c];
    }
  return mult;
}

std::vector<int> cycle_type_of(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> type;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

struct SymRow {
  std::string name;
  std::map<std::vector<int>, int> by_type;
};

GroupData symmetric_group(const std::string& name, int k, const std::vector<SymRow>& rows) {
  std::vector<std::vector<int>> perms;
  auto mult = permutation_table(k, perms);
  // Class order is only known after the classes are built, so build twice.
  GroupData bare = GroupData::from_table(name, mult, std::nullopt);
  std::vector<Irrep> irreps;
  for (const auto& row : rows) {
    Irrep ir;
    ir.name = row.name;
    for (int c = 0; c < bare.class_count(); ++c)
      ir.values.emplace_back(row.by_type.at(cycle_type_of(perms[bare.representative(c)])));
    ir.dim = static_cast<int>(numerator(ir.values[0]));
    irreps.push_back(std::move(ir));
  }
  return GroupData::from_table(name, mult, std::move(irreps));
}

Irrep make_irrep(std::string name, std::vector<int> values) {
  Irrep ir;
  ir.name = std::move(name);
  ir.dim = values.at(0);
  for (int v : values) ir.values.emplace_back(v);
  return ir;
}

}  // namespace

GroupData GroupData::from_table(std::string name, const std::vector<std::vector<int>>& mult,
                                std::optional<std::vector<Irrep>> irreps) {
  GroupData g;
  g.name_ = std::move(name);
  int n = static_cast<int>(mult.size());
  if (n == 0) fail(ErrorCode::Validation, "empty multiplication table");
  if (n > 255) fail(ErrorCode::InvalidParameter, "groups of order above 255 are not supported");
  g.order_ = n;
  g.mult_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mult[a].size()) != n) fail(ErrorCode::Validation, "multiplication table is not square");
    for (int b = 0; b < n; ++b) {
      int v = mult[a][b];
      if (v < 0 || v >= n) fail(ErrorCode::Validation, "multiplication table entry out of range");
      g.mult_[a * n + b] = v;
    }
  }
  g.mult_rows_ = mult;
  for (int a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      fail(ErrorCode::Validation, "element 0 is not a two-sided identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          fail(ErrorCode::Validation, "multiplication is not associative");
    }
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] < 0) fail(ErrorCode::Validation, "element without inverse");
  }

  g.class_of_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (g.class_of_[a] >= 0) continue;
    int idx = static_cast<int>(g.classes_.size());
    std::vector<int> cls;
    for (int x = 0; x < n; ++x) {
      int conj = g.mul(g.mul(x, a), g.inv(x));
      if (g.class_of_[conj] < 0) {
        g.class_of_[conj] = idx;
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    g.classes_.push_back(std::move(cls));
  }
  g.a_coeffs_ = class_coefficients(g);

  if (irreps) {
    int l = g.class_count();
    auto& rows = *irreps;
    if (static_cast<int>(rows.size()) != l)
      fail(ErrorCode::Validation, "character table must have one irrep per class");
    for (auto& r : rows) {
      if (static_cast<int>(r.values.size()) != l)
        fail(ErrorCode::Validation, "irrep '" + r.name + "' needs one value per class");
      if (r.dim <= 0 || r.values[0] != Rational(r.dim))
        fail(ErrorCode::Validation, "irrep '" + r.name + "' dimension does not match its identity value");
    }
    for (int x = 0; x < l; ++x)
      for (int y = 0; y < l; ++y) {
        Rational s = 0;
        for (int c = 0; c < l; ++c) s += Rational(g.class_size(c)) * rows[x].values[c] * rows[y].values[c];
        if (s != Rational(x == y ? n : 0))
          fail(ErrorCode::Validation, "character table fails row orthogonality");
        Rational t = 0;
        for (int r = 0; r < l; ++r) t += rows[r].values[x] * rows[r].values[y];
        if (t != (x == y ? Rational(n, g.class_size(x)) : Rational(0)))
          fail(ErrorCode::Validation, "character table fails column orthogonality");
      }
    g.irreps_ = std::move(irreps);
  }
  return g;
}

const std::vector<Irrep>& GroupData::irreps() const {
  if (!irreps_)
    fail(ErrorCode::UnsupportedCharacterField,
         "group '" + name_ + "' has no rational character table");
  return *irreps_;
}

std::vector<std::int64_t> class_coefficients(const GroupData& g) {
  int l = g.class_count();
  std::vector<std::int64_t> a(static_cast<std::size_t>(l) * l * l, 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int x : g.class_elements(i))
        for (int y : g.class_elements(j)) {
          int z = g.mul(x, y);
          int k = g.class_of(z);
          if (z == g.representative(k)) ++a[(i * l + j) * l + k];
        }
  return a;
}

Rational central_character(const GroupData& g, int chi, int c) {
  const auto& irr = g.irreps();
  if (chi < 0 || chi >= static_cast<int>(irr.size()) || c < 0 || c >= g.class_count())
    fail(ErrorCode::InvalidParameter, "irrep or class index out of range");
  return Rational(g.class_size(c)) * irr[chi].values[c] / Rational(irr[chi].dim);
}

BigInt central_character_int(const GroupData& g, int chi, int c) {
  Rational w = central_character(g, chi, c);
  if (!is_integer(w))
    fail(ErrorCode::UnsupportedCharacterField, "central character is not an integer");
  return numerator(w);
}

std::vector<std::vector<int>> p_blocks(const GroupData& g, int p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidParameter, "p must be prime");
  std::map<std::vector<std::int64_t>, std::vector<int>> groups;
  int count = static_cast<int>(g.irreps().size());
  for (int chi = 0; chi < count; ++chi) {
    std::vector<std::int64_t> key;
    for (int c = 0; c < g.class_count(); ++c) key.push_back(mod_p(central_character_int(g, chi, c), p));
    groups[key].push_back(chi);
  }
  std::vector<std::vector<int>> out;
  for (auto& [k, v] : groups) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

GroupData builtin_group(const std::string& name) {
  if (name == "trivial") return GroupData::from_table("trivial", {{0}}, std::vector<Irrep>{make_irrep("triv", {1})});
  if (name == "C2")
    return GroupData::from_table("C2", {{0, 1}, {1, 0}},
                                 std::vector<Irrep>{make_irrep("triv", {1, 1}), make_irrep("sign", {1, -1})});
  if (name == "C3") return GroupData::from_table("C3", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, std::nullopt);
  if (name == "V4" || name == "klein") {
    std::vector<std::vector<int>> mult(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) mult[a][b] = a ^ b;
    return GroupData::from_table("V4", mult,
                                 std::vector<Irrep>{make_irrep("triv", {1, 1, 1, 1}), make_irrep("a", {1, -1, 1, -1}),
                                                    make_irrep("b", {1, 1, -1, -1}), make_irrep("ab", {1, -1, -1, 1})});
  }
  if (name == "S3")
    return symmetric_group("S3", 3,
                           {{"triv", {{{1, 1, 1}, 1}, {{2, 1}, 1}, {{3}, 1}}},
                            {"sign", {{{1, 1, 1}, 1}, {{2, 1}, -1}, {{3}, 1}}},
                            {"std", {{{1, 1, 1}, 2}, {{2, 1}, 0}, {{3}, -1}}}});
  if (name == "S4")
    return symmetric_group(
        "S4", 4,
        {{"triv", {{{1, 1, 1, 1}, 1}, {{2, 1, 1}, 1}, {{2, 2}, 1}, {{3, 1}, 1}, {{4}, 1}}},
         {"sign", {{{1, 1, 1, 1}, 1}, {{2, 1, 1}, -1}, {{2, 2}, 1}, {{3, 1}, 1}, {{4}, -1}}},
         {"std", {{{1, 1, 1, 1}, 3}, {{2, 1, 1}, 1}, {{2, 2}, -1}, {{3, 1}, 0}, {{4}, -1}}},
         {"std_sign", {{{1, 1, 1, 1}, 3}, {{2, 1, 1}, -1}, {{2, 2}, -1}, {{3, 1}, 0}, {{4}, 1}}},
         {"two", {{{1, 1, 1, 1}, 2}, {{2, 1, 1}, 0}, {{2, 2}, 2}, {{3, 1}, -1}, {{4}, 0}}}});
  fail(ErrorCode::InvalidParameter, "unknown built-in group '" + name + "'");
}

std::vector<std::string> builtin_group_names() { return {"trivial", "C2", "C3", "V4", "S3", "S4"}; }

GroupData load_group(const nlohmann::json& doc) {
  try {
    std::string name = doc.value("name", std::string("unnamed"));
    auto mult = doc.at("mult").get<std::vector<std::vector<int>>>();
    if (doc.contains("order") && doc.at("order").get<int>() != static_cast<int>(mult.size()))
      fail(ErrorCode::Validation, "declared order does not match the table");
    std::optional<std::vector<Irrep>> irreps;
    if (doc.contains("char_table") && !doc.at("char_table").is_null()) {
      std::vector<Irrep> rows;
      for (const auto& r : doc.at("char_table").at("irreps")) {
        Irrep ir;
        ir.name = r.value("name", std::string());
        ir.dim = r.at("dim").get<int>();
        for (const auto& v : r.at("values")) {
          if (v.is_number_integer())
            ir.values.emplace_back(v.get<long long>());
          else if (v.is_string())
            ir.values.push_back(parse_rational(v.get<std::string>()));
          else
            fail(ErrorCode::UnsupportedCharacterField, "character value is not an exact rational");
        }
        rows.push_back(std::move(ir));
      }
      irreps = std::move(rows);
    }
    return GroupData::from_table(name, mult, std::move(irreps));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Validation, std::string("malformed group document: ") + e.what());
  }
}

GroupData load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidParameter, "cannot open group file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Validation, std::string("group file is not valid JSON: ") + e.what());
  }
  return load_group(doc);
}

GroupData resolve_group(const std::string& spec) {
  for (const auto& n : builtin_group_names())
    if (spec == n) return builtin_group(spec);
  if (spec == "klein") return builtin_group(spec);
  return load_group_file(spec);
}

nlohmann::json group_to_json(const GroupData& g) {
  nlohmann::json doc;
  doc["name"] = g.name();
  doc["order"] = g.order();
  doc["mult"] = g.mult_rows();
  if (g.has_char_table()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& ir : g.irreps()) {
      nlohmann::json vals = nlohmann::json::array();
      for (const auto& v : ir.values) vals.push_back(to_string(v));
      rows.push_back({{"name", ir.name}, {"dim", ir.dim}, {"values", vals}});
    }
    doc["char_table"] = {{"irreps", rows}};
  }
  return doc;
}

}  // namespace wfh
