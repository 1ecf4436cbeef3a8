#pragma once
#include <gmpxx.h>

#include <string>

namespace nzeta {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" or "p"
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& s);  // throws Error(Parse)

inline Rational make_rational(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace nzeta
