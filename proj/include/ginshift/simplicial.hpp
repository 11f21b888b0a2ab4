#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ginshift/gin.hpp"
#include "ginshift/monomial_ideal.hpp"

namespace ginshift {

/// Faces are bitmasks over vertices x1..xn (bit i-1 for x_i).
using Face = std::uint32_t;

/// A simplicial complex on vertices x1..xn stored by its facets. The void
/// complex has no faces at all; the complex {∅} has the single facet 0.
class SimplicialComplex {
 public:
  static constexpr std::size_t kMaxVertices = 20;

  /// The void complex on n vertices.
  explicit SimplicialComplex(std::size_t n);
  /// Keeps the inclusion-maximal faces among `faces`.
  SimplicialComplex(std::size_t n, std::vector<Face> faces);

  std::size_t nvertices() const noexcept { return n_; }
  /// Facets sorted by size, then by mask.
  const std::vector<Face>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool contains(Face f) const;
  /// Every face, sorted by size, then by mask.
  std::vector<Face> faces() const;
  /// -1 for {∅}; an error for the void complex.
  int dimension() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t n_;
  std::vector<Face> facets_;
};

/// One index-1 shift of f_{-1}, f_0, ...: entries[i] = f_{i-1}.
struct FVector {
  std::vector<std::uint64_t> entries;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Throws std::invalid_argument on the void complex.
FVector f_vector(const SimplicialComplex& c);

/// Minimal non-faces as squarefree monomials; a vertex in no face gives x_i.
MonomialIdeal stanley_reisner(const SimplicialComplex& c);
/// Inverse of stanley_reisner. Throws std::invalid_argument on a
/// non-squarefree generator or on more than kMaxVertices variables.
SimplicialComplex complex_of_ideal(const MonomialIdeal& m);

/// x_{i1} x_{i2} ... x_{it} (i1 <= ... <= it) ↦ x_{i1} x_{i2+1} ... x_{it+t-1},
/// as a monomial in `target_nvars` variables.
Monomial sigma(const Monomial& m, std::size_t target_nvars);
/// σ on minimal generators; target ring has nvars + maxdeg - 1 variables.
MonomialIdeal sigma(const MonomialIdeal& m);

/// σ applied to gin(I_Γ) left the n original variables.
class ShiftOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric algebraic shifting: the complex with Stanley–Reisner ideal
/// gin(I_Γ)^σ. Throws GinUncertain or ShiftOverflow.
SimplicialComplex delta_s(const SimplicialComplex& c, const GinConfig& config = {});

/// Γ1 on x1..xn and Γ2 relabeled to x_{n+1}..x_{n+m}.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// For every face F, x_i ∈ F and i < j with x_j ∉ F: F \ {x_i} ∪ {x_j} is a face.
bool is_shifted(const SimplicialComplex& c);
/// Every face of `sub` is a face of `c` (same vertex count).
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& c);

/// Facet count in [1,6], facet sizes in [1,min(4,n)], vertices uniform.
SimplicialComplex random_complex(std::size_t n, std::uint64_t seed);

/// "{1,2} {1,3}"; "{}" for the complex {∅} and "void" for the void complex.
std::string to_string(const SimplicialComplex& c);
std::string to_string(const FVector& f);

}  // namespace ginshift
