#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace framed {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised when an argument violates an operation's precondition (det <= 0, singular input, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant that should hold by construction fails.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

inline Int numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Floor division for integers (rounds toward negative infinity).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    q -= 1;
  }
  return q;
}

/// Non-negative remainder in [0, |b|).
inline Int floor_mod(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) {
    r += (b < 0 ? Int(-b) : b);
  }
  return r;
}

inline Int floor(const Rational& q) { return floor_div(numer(q), denom(q)); }

/// Fractional part, in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(floor(q)); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) {
    return 0;
  }
  return boost::multiprecision::lcm(a, b);
}

inline std::string to_string(const Int& x) { return x.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) {
    return numer(q).str();
  }
  return numer(q).str() + "/" + denom(q).str();
}

/// Parses "p", "-p" or "p/q" (q != 0). Throws DomainError on malformed input.
Int parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

inline bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Int& x) {
  if (!fits_int64(x)) {
    throw DomainError("integer " + x.str() + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

}  // namespace framed
