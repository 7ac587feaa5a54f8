#include "wfh/intpoly.hpp"

#include <cctype>
#include <sstream>

namespace wfh {

IntValuedPoly::IntValuedPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntValuedPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntValuedPoly IntValuedPoly::constant(const BigInt& c) { return IntValuedPoly(std::vector<BigInt>{c}); }

IntValuedPoly IntValuedPoly::binomial_basis(int k) {
  std::vector<BigInt> c(k + 1, 0);
  c[k] = 1;
  return IntValuedPoly(std::move(c));
}

IntValuedPoly IntValuedPoly::shifted_binomial(long long a, int k) {
  // Vandermonde: C(t - a, k) = sum_j C(-a, k - j) C(t, j).
  std::vector<BigInt> c(k + 1);
  for (int j = 0; j <= k; ++j) c[j] = binomial(BigInt(-a), k - j);
  return IntValuedPoly(std::move(c));
}

BigInt IntValuedPoly::evaluate(long long n) const {
  BigInt total = 0;
  BigInt b = 1;  // C(n, k)
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) b = b * (BigInt(n) - static_cast<long long>(k) + 1) / static_cast<long long>(k);
    total += coeffs_[k] * b;
  }
  return total;
}

IntValuedPoly IntValuedPoly::shifted(long long a) const {
  std::vector<BigInt> values;
  for (int j = 0; j <= degree(); ++j) values.push_back(evaluate(j + a));
  return ivp_from_values(0, values);
}

IntValuedPoly IntValuedPoly::operator+(const IntValuedPoly& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return IntValuedPoly(std::move(c));
}

IntValuedPoly IntValuedPoly::operator-() const {
  std::vector<BigInt> c = coeffs_;
  for (auto& x : c) x = -x;
  return IntValuedPoly(std::move(c));
}

IntValuedPoly IntValuedPoly::operator-(const IntValuedPoly& o) const { return *this + (-o); }

IntValuedPoly IntValuedPoly::operator*(const BigInt& s) const {
  std::vector<BigInt> c = coeffs_;
  for (auto& x : c) x *= s;
  return IntValuedPoly(std::move(c));
}

IntValuedPoly IntValuedPoly::operator*(const IntValuedPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  int d = degree() + o.degree();
  std::vector<BigInt> values;
  for (int j = 0; j <= d; ++j) values.push_back(evaluate(j) * o.evaluate(j));
  return ivp_from_values(0, values);
}

BigInt ivp_evaluate(const IntValuedPoly& p, long long n) { return p.evaluate(n); }

namespace {

std::vector<BigInt> forward_differences(const std::vector<BigInt>& values) {
  std::vector<BigInt> row = values;
  std::vector<BigInt> leading;
  while (!row.empty()) {
    leading.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return leading;
}

}  // namespace

IntValuedPoly ivp_from_values(long long n0, const std::vector<BigInt>& values) {
  if (values.empty()) return {};
  std::vector<BigInt> newton = forward_differences(values);
  if (n0 == 0) return IntValuedPoly(std::move(newton));
  std::vector<BigInt> at_zero;
  for (std::size_t j = 0; j < values.size(); ++j) {
    BigInt v = 0;
    for (std::size_t k = 0; k < newton.size(); ++k)
      v += newton[k] * binomial(BigInt(static_cast<long long>(j) - n0), static_cast<int>(k));
    at_zero.push_back(v);
  }
  return IntValuedPoly(forward_differences(at_zero));
}

IntValuedPoly interpolate_stable(const std::function<BigInt(long long)>& oracle, long long n0, int cap) {
  std::vector<BigInt> values;
  auto ensure = [&](std::size_t count) {
    while (values.size() < count) values.push_back(oracle(n0 + static_cast<long long>(values.size())));
  };
  auto diff_row = [&](int order) {
    std::vector<BigInt> row = values;
    for (int o = 0; o < order; ++o) {
      for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
      row.pop_back();
    }
    return row;
  };
  for (int d = 0; d <= cap; ++d) {
    ensure(static_cast<std::size_t>(d) + 4);
    auto row = diff_row(d + 1);
    if (row[0] != 0 || row[1] != 0 || row[2] != 0) continue;
    std::vector<BigInt> head(values.begin(), values.begin() + d + 1);
    IntValuedPoly p = ivp_from_values(n0, head);
    ensure(static_cast<std::size_t>(d) + 6);
    bool ok = true;
    for (std::size_t i = 0; i < values.size() && ok; ++i)
      ok = p.evaluate(n0 + static_cast<long long>(i)) == values[i];
    if (ok) return p;
  }
  std::ostringstream msg;
  msg << "no stabilization within degree cap " << cap << "; values from n=" << n0 << ":";
  for (const auto& v : values) msg << ' ' << v;
  fail(ErrorCode::DegreeCapExceeded, msg.str());
}

std::string to_string(const IntValuedPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& a = p.coeffs()[k];
    if (a == 0) continue;
    BigInt mag = a < 0 ? BigInt(-a) : a;
    if (first)
      s += a < 0 ? "-" : "";
    else
      s += a < 0 ? " - " : " + ";
    first = false;
    if (k == 0)
      s += mag.str();
    else {
      if (mag != 1) s += mag.str() + "*";
      s += "C(t," + std::to_string(k) + ")";
    }
  }
  return s;
}

IntValuedPoly parse_intpoly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto bad = [&]() -> IntValuedPoly { fail(ErrorCode::InvalidParameter, "cannot parse polynomial '" + std::string(text) + "'"); };
  if (s == "0") return {};
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      bad();
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    BigInt mag = start == pos ? BigInt(1) : BigInt(s.substr(start, pos - start));
    int k = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'C')) {
      if (s[pos] == '*') {
        if (start == pos) bad();
        ++pos;
      }
      if (s.compare(pos, 4, "C(t,") != 0) bad();
      pos += 4;
      std::size_t kstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (kstart == pos || pos >= s.size() || s[pos] != ')') bad();
      k = std::stoi(s.substr(kstart, pos - kstart));
      ++pos;
    } else if (start == pos) {
      bad();
    }
    if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, 0);
    coeffs[k] += mag * sign;
  }
  return IntValuedPoly(std::move(coeffs));
}

}  // namespace wfh
