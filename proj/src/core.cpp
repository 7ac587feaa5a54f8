#include "wfh/core.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>

namespace wfh {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::Validation: return "validation-failure";
    case ErrorCode::UnsupportedCharacterField: return "unsupported-character-field";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::DegreeCapExceeded: return "degree-cap-exceeded";
    case ErrorCode::NotCentral: return "not-central";
    case ErrorCode::Precision: return "precision";
  }
  return "unknown";
}

namespace {

std::uint64_t initial_cap() {
  if (const char* env = std::getenv("WFH_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

std::atomic<std::uint64_t>& cap_storage() {
  static std::atomic<std::uint64_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::uint64_t max_enumeration() { return cap_storage().load(); }
void set_max_enumeration(std::uint64_t cap) { cap_storage().store(cap); }

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(const BigInt& n, int k) {
  if (k < 0) return 0;
  BigInt num = 1;
  for (int i = 0; i < k; ++i) num *= (n - i);
  return num / factorial(k);
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> Rational {
    fail(ErrorCode::UnsupportedCharacterField, "not an exact rational value: '" + text + "'");
  };
  auto parse_int = [&](const std::string& s) -> BigInt {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) bad();
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) bad();
  return Rational(num, den);
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

std::int64_t mod_p(const BigInt& x, std::int64_t p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

}  // namespace wfh
