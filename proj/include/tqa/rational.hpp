#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tqa {

// Exact rational numbers. GMP keeps values canonical (reduced fraction,
// positive denominator) as long as arithmetic goes through mpq_class;
// only raw numerator/denominator construction needs an explicit
// canonicalize, which make_rational takes care of.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

// Accepts "n" or "n/d".
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rational: bad literal '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace tqa
