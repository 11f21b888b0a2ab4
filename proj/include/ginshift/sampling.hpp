#pragma once

#include <cstdint>

#include "ginshift/groebner.hpp"
#include "ginshift/simplicial.hpp"

namespace ginshift {

/// Random graded ideal in `nvars` variables: 1 to 3 generators of degree 2
/// to max(2, max_deg). With probability 1/2 a monomial antichain, otherwise
/// generators with 2 or 3 terms and integer coefficients in [-9, 9].
IdealPresentation random_ideal(std::size_t nvars, unsigned max_deg, std::uint64_t seed);

/// A subcomplex of `c` spanned by a random nonempty selection of its faces.
SimplicialComplex random_subcomplex(const SimplicialComplex& c, std::uint64_t seed);

}  // namespace ginshift
