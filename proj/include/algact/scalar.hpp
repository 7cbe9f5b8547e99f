#pragma once

// Exact scalar types. Both are GMP-backed Boost.Multiprecision numbers with
// expression templates disabled so that they behave as plain value types
// inside Eigen expressions.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>

namespace algact {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using BigRat = mp::number<mp::gmp_rational, mp::et_off>;

inline BigInt numer(const BigRat& q) { return BigInt(mp::numerator(q)); }
inline BigInt denom(const BigRat& q) { return BigInt(mp::denominator(q)); }

inline bool is_integral(const BigRat& q) { return denom(q) == 1; }

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
inline BigRat abs(const BigRat& a) { return a < 0 ? BigRat(-a) : a; }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return BigInt(mp::gcd(a, b)); }
inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(BigInt(a / gcd(a, b) * b));
}

/// Floor division and the matching nonnegative remainder (for b > 0).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}
inline BigInt mod_floor(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

/// Extended gcd: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
struct XGcd {
  BigInt g, x, y;
};
XGcd xgcd(const BigInt& a, const BigInt& b);

inline std::string to_string(const BigInt& a) { return a.str(); }
inline std::string to_string(const BigRat& a) { return a.str(); }

inline std::int64_t to_i64(const BigInt& a) { return a.convert_to<std::int64_t>(); }

inline bool fits_i64(const BigInt& a) {
  static const BigInt lo = BigInt(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
  return a >= lo && a <= hi;
}

}  // namespace algact
