#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ginshift/monomial.hpp"

namespace ginshift {

/// Monomial ideal stored by its minimal generators. Generators are kept in
/// canonical order (degree ascending, RevLex-descending within a degree), so
/// two ideals are equal iff their generator lists are equal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  /// Minimalizes the given generating set.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  /// (x1, ..., xn), the maximal homogeneous ideal.
  static MonomialIdeal maximal(std::size_t nvars);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return !gens_.empty() && gens_.front().is_unit(); }
  unsigned max_generator_degree() const noexcept;
  unsigned min_generator_degree() const noexcept;

  bool contains(const Monomial& m) const;
  /// Degree-d monomials of the ideal, descending in `order`.
  std::vector<Monomial> slice(unsigned d, TermOrder order = TermOrder::RevLex) const;
  /// Degree-d monomials outside the ideal, descending in `order`.
  std::vector<Monomial> standard_monomials(unsigned d, TermOrder order = TermOrder::RevLex) const;
  /// The ideal generated by the minimal generators of degree <= k.
  MonomialIdeal truncated(unsigned k) const;

  /// Stable 64-bit fingerprint of the generator list.
  std::uint64_t fingerprint() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned k);
/// Renames x_i to x_{i+offset} in a ring with target_nvars variables.
MonomialIdeal embed(const MonomialIdeal& m, std::size_t offset, std::size_t target_nvars);
/// a ⊆ b.
bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b);

/// x_j·x^a/x_i ∈ M for every generator x^a, every x_i | x^a and j < i.
bool is_strongly_stable(const MonomialIdeal& m);
/// Squarefree analogue: only j < i with x_j ∤ x^a. Throws std::invalid_argument
/// on a non-squarefree generator.
bool is_squarefree_strongly_stable(const MonomialIdeal& m);

/// "(x1^2, x1*x2)"; "(0)" for the zero ideal.
std::string to_string(const MonomialIdeal& m);

}  // namespace ginshift
