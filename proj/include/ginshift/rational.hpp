#pragma once

#include <gmpxx.h>

#include <string>

namespace ginshift {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Least common multiple of the denominators, as a positive integer.
template <class Range>
Integer common_denominator(const Range& values) {
  Integer l = 1;
  for (const Rational& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace ginshift
