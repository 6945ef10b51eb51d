#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace primcomp {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values reduced with
// a positive denominator and a canonical zero (0/1), which is exactly the
// normalization contract the rest of the library relies on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// cpp_rational's own two-argument constructor rejects negative denominators
// outright; this normalizes the sign first. The denominator must be non-zero.
inline Rat make_rat(Int n, Int d) {
  internal_check(d != 0, "make_rat with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rat(std::move(n), std::move(d));
}

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int abs_int(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division for possibly negative numerators (C++ '/' truncates).
inline Int floor_div(const Int& a, const Int& b) {
  internal_check(b != 0, "floor_div by zero");
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
struct ExtGcd {
  Int g, x, y;
};
ExtGcd ext_gcd(const Int& a, const Int& b);

// Inverse of a modulo m (m >= 1, gcd(a,m) == 1); result in [0, m).
Int mod_inverse(const Int& a, const Int& m);

// Value in [0, m) congruent to a modulo m (m >= 1).
inline Int mod_floor(const Int& a, const Int& m) {
  internal_check(m > 0, "mod_floor needs positive modulus");
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Machine-word counterparts of mod_floor / mod_inverse, for hot paths whose
// inputs are known to fit (m >= 1; for the inverse, gcd(a, m) == 1).
inline std::int64_t mod_floor64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}
std::int64_t mod_inverse64(std::int64_t a, std::int64_t m);

// Binomial coefficient C(n, k) for 0 <= k <= n (exact).
Int binomial(unsigned n, unsigned k);

// Parses an integer in base 10 (optional leading '-'). Throws ErrorCode::Parse.
Int parse_int(const std::string& text);

// Parses "p" or "p/q" (q > 0 after normalization). Throws ErrorCode::Parse.
Rat parse_rat(const std::string& text);

// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

inline std::string int_to_string(const Int& v) { return v.str(); }

// True when the value fits in a signed 64-bit integer.
bool fits_int64(const Int& v, std::int64_t* out = nullptr);

}  // namespace primcomp
