#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ginshift/matrix.hpp"
#include "ginshift/monomial.hpp"
#include "ginshift/rational.hpp"

namespace ginshift {

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact rational coefficients. Terms are stored
/// without zero coefficients, sorted descending in the polynomial's term
/// order, so the leading term is terms().front().
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0, TermOrder order = TermOrder::RevLex)
      : nvars_(nvars), order_(order) {}
  /// Sums duplicate monomials and drops zeros.
  Polynomial(std::size_t nvars, std::vector<Term> terms, TermOrder order = TermOrder::RevLex);

  static Polynomial constant(std::size_t nvars, const Rational& c,
                             TermOrder order = TermOrder::RevLex);
  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1,
                                  TermOrder order = TermOrder::RevLex);
  /// x_{index+1}.
  static Polynomial variable(std::size_t nvars, std::size_t index,
                             TermOrder order = TermOrder::RevLex);

  std::size_t nvars() const noexcept { return nvars_; }
  TermOrder order() const noexcept { return order_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  /// Common degree of all terms, or nullopt for zero and mixed-degree polynomials.
  std::optional<unsigned> homogeneous_degree() const noexcept { return homogeneous_degree_; }
  bool is_homogeneous() const noexcept { return homogeneous_degree_.has_value(); }
  unsigned max_degree() const noexcept;

  Rational coefficient(const Monomial& m) const;

  /// Same polynomial re-sorted for another term order.
  Polynomial with_order(TermOrder order) const;
  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const;
  /// The sum of the terms of degree d.
  Polynomial homogeneous_component(unsigned d) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Monomial& m, const Polynomial& p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void normalize();
  void refresh_degree() noexcept;

  std::size_t nvars_;
  TermOrder order_;
  std::vector<Term> terms_;
  std::optional<unsigned> homogeneous_degree_;
};

/// p^e, e >= 0.
Polynomial power(const Polynomial& p, unsigned e);

/// Contraction τ_g(l): the bilinear extension of x^a, x^b ↦ x^(b-a) when a
/// divides b and 0 otherwise.
Polynomial contract(const Polynomial& g, const Polynomial& l);

/// Linear substitution x_i ↦ Σ_j M(j, i) x_j: column i holds the image of x_i.
/// Throws std::invalid_argument for a non-square or wrongly sized matrix.
Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& m);

/// Renames variable i to variable i+offset of a ring with target_nvars
/// variables. Throws std::out_of_range when the target ring is too small.
Polynomial embed(const Polynomial& p, std::size_t offset, std::size_t target_nvars);

/// Bitmask of variables occurring in p.
std::uint64_t support(const Polynomial& p) noexcept;

}  // namespace ginshift
