#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ginshift/gin.hpp"
#include "ginshift/groebner.hpp"
#include "ginshift/linalg.hpp"
#include "ginshift/poly_io.hpp"
#include "ginshift/random.hpp"

namespace test {

using namespace ginshift;

inline Polynomial poly(const char* text, std::size_t n) { return parse_polynomial(text, n); }
inline Monomial mono(const char* text, std::size_t n) { return parse_monomial(text, n); }

inline IdealPresentation ideal(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, n));
  return IdealPresentation(RingContext(n), std::move(ps));
}

inline MonomialIdeal monomials(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(parse_monomial(g, n));
  return MonomialIdeal(n, std::move(ms));
}

inline GinConfig config(std::uint64_t seed) {
  GinConfig c;
  c.seed = seed;
  return c;
}

/// Random monomial of degree d in n variables.
inline Monomial random_monomial(Rng& rng, std::size_t n, unsigned d) {
  std::vector<int> e(n);
  for (unsigned k = 0; k < d; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1))];
  return Monomial::from_exponents(e);
}

/// Random polynomial with up to `terms` terms of degrees up to `max_deg`.
inline Polynomial random_polynomial(Rng& rng, std::size_t n, unsigned max_deg, int terms, bool homogeneous) {
  std::vector<Term> ts;
  const auto d0 = static_cast<unsigned>(rng.uniform(0, max_deg));
  for (int t = 0; t < terms; ++t) {
    const unsigned d = homogeneous ? d0 : static_cast<unsigned>(rng.uniform(0, max_deg));
    ts.push_back({random_monomial(rng, n, d), Rational(static_cast<long>(rng.uniform(-5, 5)))});
  }
  return Polynomial(n, std::move(ts));
}

inline RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>(rng.uniform(-3, 3)));
    bool singular = false;
    try {
      (void)linalg::inverse(m);
    } catch (const std::domain_error&) {
      singular = true;
    }
    if (!singular) return m;
  }
}

}  // namespace test
