#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bsrig {

/// Arbitrary-precision signed integer used for every exponent and index.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when an operation's precondition on group parameters or inputs fails.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline int sign(const BigInt& x) { return x.sign(); }

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// Remainder in [0, |d|).
inline BigInt floor_mod(const BigInt& x, const BigInt& d) {
  BigInt ad = abs(d);
  BigInt r = x % ad;
  if (r < 0) r += ad;
  return r;
}

/// Quotient q with x = q*|d| + floor_mod(x, d).
inline BigInt floor_div(const BigInt& x, const BigInt& d) {
  BigInt ad = abs(d);
  return (x - floor_mod(x, d)) / ad;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a) / gcd(a, b) * abs(b);
}

inline BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Narrowing conversion for values used as loop bounds; throws when |x| is too large.
inline std::int64_t to_int64(const BigInt& x, const char* what = "integer") {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi) {
    throw DomainError(std::string(what) + " out of 64-bit range: " + x.str());
  }
  return x.convert_to<std::int64_t>();
}

}  // namespace bsrig
