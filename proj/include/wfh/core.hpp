#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wfh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  InvalidParameter,
  Validation,
  UnsupportedCharacterField,
  ResourceLimit,
  DegreeCapExceeded,
  NotCentral,
  Precision,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Upper bound on the number of group elements a single brute-force
// operation may enumerate. Initialised from WFH_MAX_ENUM when set.
std::uint64_t max_enumeration();
void set_max_enumeration(std::uint64_t cap);

BigInt factorial(int n);
BigInt binomial(const BigInt& n, int k);  // generalized: n may be negative
Rational parse_rational(const std::string& text);  // "p/q" or "p"; throws UnsupportedCharacterField
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);
bool is_integer(const Rational& x);
// Representative of x mod p in [0, p).
std::int64_t mod_p(const BigInt& x, std::int64_t p);

}  // namespace wfh
