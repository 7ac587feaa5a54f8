#include "wfh/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace wfh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(ErrorCode::InvalidParameter, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(ErrorCode::InvalidParameter, "partition parts must be non-increasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_[0]; ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::vector<int> contents(const Partition& lambda) {
  std::vector<int> out;
  out.reserve(lambda.size());
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) out.push_back(j - i);
  return out;
}

namespace {

std::vector<int> beta_set(const Partition& lambda, int beads) {
  std::vector<int> beta(beads);
  for (int i = 0; i < beads; ++i) {
    int part = i < lambda.length() ? lambda[i] : 0;
    beta[i] = part + beads - 1 - i;
  }
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  int beads = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < beads; ++i) {
    int part = beta[i] - (beads - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

}  // namespace

Partition p_core(const Partition& lambda, int p) {
  if (p < 2) fail(ErrorCode::InvalidParameter, "p-core needs p >= 2");
  int beads = lambda.length();
  std::vector<int> beta = beta_set(lambda, beads);
  // Slide every bead up its runner as far as it goes.
  std::vector<int> per_runner(p, 0);
  for (int b : beta) ++per_runner[b % p];
  std::vector<int> core_beta;
  for (int r = 0; r < p; ++r)
    for (int k = 0; k < per_runner[r]; ++k) core_beta.push_back(r + k * p);
  return from_beta_set(std::move(core_beta));
}

std::vector<BorderStrip> border_strips(const Partition& lambda, int k) {
  std::vector<BorderStrip> out;
  if (k < 1 || k > lambda.size()) return out;
  int beads = lambda.length() + k;
  std::vector<int> beta = beta_set(lambda, beads);
  std::set<int> occupied(beta.begin(), beta.end());
  for (int b : beta) {
    int target = b - k;
    if (target < 0 || occupied.count(target)) continue;
    int height = 0;
    for (int x = target + 1; x < b; ++x)
      if (occupied.count(x)) ++height;
    std::vector<int> moved = beta;
    std::replace(moved.begin(), moved.end(), b, target);
    BorderStrip strip;
    strip.result = from_beta_set(moved);
    strip.height = height;
    for (int i = 0; i < lambda.length(); ++i) {
      int keep = i < strip.result.length() ? strip.result[i] : 0;
      for (int j = keep; j < lambda[i]; ++j) strip.boxes.emplace_back(i, j);
    }
    out.push_back(std::move(strip));
  }
  std::sort(out.begin(), out.end(),
            [](const BorderStrip& a, const BorderStrip& b) { return a.result > b.result; });
  return out;
}

Partition reduce_cycle_type(const Partition& lambda) {
  std::vector<int> parts;
  for (int p : lambda.parts())
    if (p > 1) parts.push_back(p - 1);
  return Partition(std::move(parts));
}

std::optional<Partition> unreduce_cycle_type(const Partition& mu, int n) {
  if (n < mu.size() + mu.length()) return std::nullopt;
  std::vector<int> parts;
  for (int p : mu.parts()) parts.push_back(p + 1);
  for (int i = mu.size() + mu.length(); i < n; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigInt sym_class_size(const Partition& mu, int n) {
  if (mu.size() != n) fail(ErrorCode::InvalidParameter, "cycle type size differs from n");
  BigInt z = 1;
  for (int i = 1; i <= n; ++i) {
    int m = mu.multiplicity(i);
    for (int k = 0; k < m; ++k) z *= i;
    z *= factorial(m);
  }
  return factorial(n) / z;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  void expect(char c) {
    if (!peek(c))
      fail(ErrorCode::InvalidParameter,
           std::string("expected '") + c + "' in '" + std::string(text) + "'");
    ++pos;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6)
      fail(ErrorCode::InvalidParameter, "expected integer in '" + std::string(text) + "'");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }
  bool done() {
    skip_ws();
    return pos == text.size();
  }
};

Partition parse_partition_at(Cursor& cur) {
  cur.expect('(');
  std::vector<int> parts;
  if (!cur.peek(')')) {
    parts.push_back(cur.integer());
    while (cur.peek(',')) {
      cur.expect(',');
      parts.push_back(cur.integer());
    }
  }
  cur.expect(')');
  return Partition(std::move(parts));
}

}  // namespace

Partition parse_partition(std::string_view text) {
  Cursor cur{text};
  Partition p = parse_partition_at(cur);
  if (!cur.done()) fail(ErrorCode::InvalidParameter, "trailing input in '" + std::string(text) + "'");
  return p;
}

Multipartition::Multipartition(std::map<int, Partition> comps) {
  for (auto& [c, p] : comps) {
    if (c < 0) fail(ErrorCode::InvalidParameter, "negative component index");
    if (!p.empty()) comps_.emplace(c, std::move(p));
  }
}

Multipartition Multipartition::concentrated(int c, Partition p) {
  std::map<int, Partition> m;
  m.emplace(c, std::move(p));
  return Multipartition(std::move(m));
}

const Partition& Multipartition::operator[](int c) const {
  static const Partition kEmpty;
  auto it = comps_.find(c);
  return it == comps_.end() ? kEmpty : it->second;
}

void Multipartition::set(int c, Partition p) {
  if (p.empty())
    comps_.erase(c);
  else
    comps_[c] = std::move(p);
}

int Multipartition::size() const {
  int s = 0;
  for (const auto& [c, p] : comps_) s += p.size();
  return s;
}

int Multipartition::length() const {
  int s = 0;
  for (const auto& [c, p] : comps_) s += p.length();
  return s;
}

int Multipartition::affected() const { return size() + (*this)[0].length(); }

std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  int top = 0;
  if (!a.comps_.empty()) top = std::max(top, a.comps_.rbegin()->first);
  if (!b.comps_.empty()) top = std::max(top, b.comps_.rbegin()->first);
  for (int i = 0; i <= top; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Multipartition partially_reduce(const Multipartition& mu) {
  Multipartition out = mu;
  out.set(0, reduce_cycle_type(mu[0]));
  return out;
}

Multipartition fully_reduce(const Multipartition& mu) {
  std::map<int, Partition> m;
  for (const auto& [c, p] : mu.components()) m.emplace(c, reduce_cycle_type(p));
  return Multipartition(std::move(m));
}

Multipartition hat(const Multipartition& mu) {
  std::map<int, Partition> m;
  for (const auto& [c, p] : mu.components()) {
    if (c == 0) {
      m.emplace(c, p);
      continue;
    }
    std::vector<int> parts;
    for (int x : p.parts()) parts.push_back(x + 1);
    m.emplace(c, Partition(std::move(parts)));
  }
  return Multipartition(std::move(m));
}

Multipartition reduce_partial_label(const Multipartition& mu) {
  std::map<int, Partition> m;
  for (const auto& [c, p] : mu.components()) m.emplace(c, c == 0 ? p : reduce_cycle_type(p));
  return Multipartition(std::move(m));
}

std::optional<Multipartition> unreduce_partial(const Multipartition& mu, int n) {
  int used = mu.affected();
  if (n < used) return std::nullopt;
  Multipartition out = mu;
  std::vector<int> parts;
  for (int x : mu[0].parts()) parts.push_back(x + 1);
  for (int i = used; i < n; ++i) parts.push_back(1);
  out.set(0, Partition(std::move(parts)));
  return out;
}

Multipartition multipartition_union(const Multipartition& a, const Multipartition& b) {
  std::map<int, Partition> m = a.components();
  for (const auto& [c, p] : b.components()) {
    std::vector<int> parts = a[c].parts();
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    m[c] = Partition::from_unsorted(std::move(parts));
  }
  return Multipartition(std::move(m));
}

std::vector<Multipartition> multipartitions_of(int k, int l) {
  std::vector<Multipartition> out;
  if (k < 0 || l < 0) return out;
  if (l == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<std::vector<Partition>> by_size(k + 1);
  for (int s = 0; s <= k; ++s) by_size[s] = partitions_of(s);
  std::map<int, Partition> cur;
  std::function<void(int, int)> rec = [&](int c, int remaining) {
    if (c == l - 1) {
      for (const auto& p : by_size[remaining]) {
        auto m = cur;
        m[c] = p;
        out.emplace_back(std::move(m));
      }
      return;
    }
    for (int s = 0; s <= remaining; ++s)
      for (const auto& p : by_size[s]) {
        cur[c] = p;
        rec(c + 1, remaining - s);
        cur.erase(c);
      }
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Multipartition& m) { return to_string(m, false); }

std::string to_string(const Multipartition& m, bool short_form) {
  bool only_zero = m.components().empty() ||
                   (m.components().size() == 1 && m.components().begin()->first == 0);
  if (short_form && only_zero) return to_string(m[0]);
  std::string s = "[";
  bool first = true;
  for (const auto& [c, p] : m.components()) {
    if (!first) s += ";";
    first = false;
    s += to_string(p) + "@" + std::to_string(c);
  }
  return s + "]";
}

Multipartition parse_multipartition(std::string_view text) {
  Cursor cur{text};
  if (cur.peek('(')) {
    Partition p = parse_partition_at(cur);
    if (!cur.done()) fail(ErrorCode::InvalidParameter, "trailing input in '" + std::string(text) + "'");
    return Multipartition::concentrated(0, std::move(p));
  }
  cur.expect('[');
  std::map<int, Partition> comps;
  if (!cur.peek(']')) {
    while (true) {
      Partition p = parse_partition_at(cur);
      cur.expect('@');
      int c = cur.integer();
      if (comps.count(c))
        fail(ErrorCode::InvalidParameter, "repeated component in '" + std::string(text) + "'");
      comps.emplace(c, std::move(p));
      if (!cur.peek(';')) break;
      cur.expect(';');
    }
  }
  cur.expect(']');
  if (!cur.done()) fail(ErrorCode::InvalidParameter, "trailing input in '" + std::string(text) + "'");
  return Multipartition(std::move(comps));
}

}  // namespace wfh
