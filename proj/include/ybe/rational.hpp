#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ybe {

/// Exact rational number, always kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// "p" or "p/q".
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses "p", "-p", "p/q"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace ybe
