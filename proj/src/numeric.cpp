#include "numeric.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace primcomp {

ExtGcd ext_gcd(const Int& a, const Int& b) {
  // Iterative Bezout; signs follow the classical recurrence.
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncating division is fine for the invariants used
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
    tmp = old_y - q * y;
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

Int mod_inverse(const Int& a, const Int& m) {
  internal_check(m >= 1, "mod_inverse needs positive modulus");
  ExtGcd e = ext_gcd(mod_floor(a, m), m);
  internal_check(e.g == 1, "mod_inverse of non-unit");
  return mod_floor(e.x, m);
}

std::int64_t mod_inverse64(std::int64_t a, std::int64_t m) {
  internal_check(m >= 1, "mod_inverse needs positive modulus");
  std::int64_t r0 = mod_floor64(a, m), r1 = m;
  std::int64_t x0 = 1, x1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    const std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const std::int64_t x2 = x0 - q * x1;
    x0 = x1;
    x1 = x2;
  }
  internal_check(r0 == 1, "mod_inverse of non-unit");
  return mod_floor64(x0, m);
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result = result * Int(n - k + i) / Int(i);
  }
  return result;
}

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Int parse_int(const std::string& text) {
  if (!is_plain_integer(text)) {
    throw Error(ErrorCode::Parse, "BadInteger",
                "not a base-10 integer: '" + text + "'");
  }
  return Int(text);
}

Rat parse_rat(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(text));
  }
  Int p = parse_int(text.substr(0, slash));
  Int q = parse_int(text.substr(slash + 1));
  if (q == 0) {
    throw Error(ErrorCode::Parse, "ZeroDenominator",
                "zero denominator in '" + text + "'");
  }
  return make_rat(std::move(p), std::move(q));
}

std::string rat_to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

bool fits_int64(const Int& v, std::int64_t* out) {
  static const Int kMin = Int(std::numeric_limits<std::int64_t>::min());
  static const Int kMax = Int(std::numeric_limits<std::int64_t>::max());
  if (v < kMin || v > kMax) return false;
  if (out) *out = v.convert_to<std::int64_t>();
  return true;
}

}  // namespace primcomp
