#include "ginshift/sampling.hpp"

#include <algorithm>

#include "ginshift/random.hpp"

namespace ginshift {

namespace {

Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned d) {
  std::vector<int> e(nvars);
  for (unsigned k = 0; k < d; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nvars) - 1))];
  return Monomial::from_exponents(e);
}

}  // namespace

IdealPresentation random_ideal(std::size_t nvars, unsigned max_deg, std::uint64_t seed) {
  Rng rng(seed);
  const auto top = static_cast<std::int64_t>(std::max(2u, max_deg));
  const auto count = rng.uniform(1, 3);
  std::vector<Polynomial> gens;
  if (rng.coin()) {
    std::vector<Monomial> mons;
    for (std::int64_t g = 0; g < count; ++g)
      mons.push_back(random_monomial(rng, nvars, static_cast<unsigned>(rng.uniform(2, top))));
    const MonomialIdeal antichain(nvars, std::move(mons));
    for (const Monomial& m : antichain.generators()) gens.push_back(Polynomial::from_monomial(m));
  } else {
    while (static_cast<std::int64_t>(gens.size()) < count) {
      const auto d = static_cast<unsigned>(rng.uniform(2, top));
      const auto terms = rng.uniform(2, 3);
      std::vector<Term> ts;
      for (std::int64_t t = 0; t < terms; ++t) {
        std::int64_t c = 0;
        while (c == 0) c = rng.uniform(-9, 9);
        ts.push_back({random_monomial(rng, nvars, d), Rational(static_cast<long>(c))});
      }
      Polynomial p(nvars, std::move(ts));
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }
  return IdealPresentation(RingContext(nvars), std::move(gens));
}

SimplicialComplex random_subcomplex(const SimplicialComplex& c, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<Face> faces = c.faces();
  if (faces.empty()) return c;
  std::vector<Face> chosen;
  const auto count = rng.uniform(1, 4);
  for (std::int64_t k = 0; k < count; ++k)
    chosen.push_back(faces[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(faces.size()) - 1))]);
  return SimplicialComplex(c.nvertices(), std::move(chosen));
}

}  // namespace ginshift
