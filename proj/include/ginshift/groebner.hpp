#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ginshift/monomial.hpp"
#include "ginshift/monomial_ideal.hpp"
#include "ginshift/polynomial.hpp"

namespace ginshift {

/// A graded ideal given by homogeneous generators. The zero ideal has no
/// generators. Construction rejects zero and inhomogeneous generators.
class IdealPresentation {
 public:
  IdealPresentation(RingContext ring, std::vector<Polynomial> generators);
  explicit IdealPresentation(const MonomialIdeal& m);

  const RingContext& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_.nvars(); }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_monomial() const noexcept;
  unsigned max_degree() const noexcept;
  unsigned min_degree() const noexcept;

 private:
  RingContext ring_;
  std::vector<Polynomial> generators_;
};

/// Reduced, monic Gröbner basis sorted by leading monomial (ascending).
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, TermOrder order, std::vector<Polynomial> elements)
      : nvars_(nvars), order_(order), elements_(std::move(elements)) {}

  std::size_t nvars() const noexcept { return nvars_; }
  TermOrder order() const noexcept { return order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  std::size_t nvars_;
  TermOrder order_;
  std::vector<Polynomial> elements_;
};

/// Division by a Gröbner basis with cached per-degree tables. Not safe for
/// concurrent use; create one per thread.
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis& basis);
  ~Reducer();
  Reducer(Reducer&&) noexcept;
  Reducer& operator=(Reducer&&) noexcept;

  /// Remainder with no monomial divisible by a leading monomial of the basis.
  Polynomial normal_form(const Polynomial& f);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// S-polynomial lcm/lm(f)·f/lc(f) - lcm/lm(g)·g/lc(g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Gröbner basis: normal selection strategy with the Gebauer–Möller
/// criteria (coprime leading terms, chain criterion).
GroebnerBasis buchberger(const IdealPresentation& ideal, TermOrder order);

/// Every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

MonomialIdeal initial_ideal(const GroebnerBasis& basis);
MonomialIdeal initial_ideal(const IdealPresentation& ideal, TermOrder order);

/// Degree-d monomials outside ini(I), descending in `order`.
std::vector<Monomial> quotient_basis(const IdealPresentation& ideal, unsigned d,
                                     TermOrder order = TermOrder::RevLex);
std::size_t hilbert_dim(const IdealPresentation& ideal, unsigned d);
std::size_t hilbert_dim(const MonomialIdeal& ideal, unsigned d);

/// Degree-d part of the ideal as a matrix: rows m·g for all generators g and
/// monomials m with deg(m·g) = d, columns the degree-d monomials descending
/// in `order`.
std::vector<std::vector<Rational>> macaulay_matrix(const IdealPresentation& ideal, TermOrder order, unsigned d);

/// ini(I)_d by exact fraction-free elimination of the degree-d Macaulay
/// matrix: the pivot columns. Independent of buchberger().
std::vector<Monomial> macaulay_initial(const IdealPresentation& ideal, TermOrder order, unsigned d);

/// Default cutoff degree for Macaulay-matrix comparisons: 2·maxdeg + 2.
unsigned default_macaulay_cutoff(const IdealPresentation& ideal);

/// Raised when a prime divides a denominator of the input.
class UnluckyPrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gröbner basis over Z/p, a speed path and pre-check only.
struct ModpBasis {
  std::size_t nvars;
  TermOrder order;
  std::uint64_t prime;
  /// Monic elements, terms descending; coefficients in [0, p).
  std::vector<std::vector<std::pair<Monomial, std::uint64_t>>> elements;

  std::vector<Monomial> leading_monomials() const;
};

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Requires p prime and p < 2^62; throws std::invalid_argument otherwise and
/// UnluckyPrime when p divides a coefficient denominator.
ModpBasis modp_accelerator(const IdealPresentation& ideal, TermOrder order, std::uint64_t p);

/// The mod-p run disagrees with the exact one on leading monomials.
bool is_unlucky(const ModpBasis& modp, const GroebnerBasis& exact);

}  // namespace ginshift
