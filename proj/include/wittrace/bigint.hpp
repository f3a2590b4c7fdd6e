#ifndef WITTRACE_BIGINT_HPP
#define WITTRACE_BIGINT_HPP

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace wittrace {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Euclidean remainder in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline bool fits_int64(const Int& a) {
  static const Int lo = std::numeric_limits<int64_t>::min();
  static const Int hi = std::numeric_limits<int64_t>::max();
  return a >= lo && a <= hi;
}

inline bool fits_int32(const Int& a) {
  static const Int lo = std::numeric_limits<int32_t>::min();
  static const Int hi = std::numeric_limits<int32_t>::max();
  return a >= lo && a <= hi;
}

inline int64_t to_int64(const Int& a) { return a.convert_to<int64_t>(); }

// Modular inverse of a mod m; returns false when gcd(a, m) != 1.
inline bool mod_inverse(const Int& a, const Int& m, Int& out) {
  Int r0 = m, r1 = mod_floor(a, m);
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) return false;
  out = mod_floor(s0, m);
  return true;
}

}  // namespace wittrace

#endif
