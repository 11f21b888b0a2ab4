#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ginshift/groebner.hpp"
#include "ginshift/matrix.hpp"
#include "ginshift/monomial_ideal.hpp"

namespace ginshift {

/// An invertible matrix A = (a_ij) defining f_j = Σ_i a_ij x_i and the
/// automorphism φ(x_j) = f_j.
class GenericChange {
 public:
  /// Throws std::invalid_argument if `a` is not square or is singular.
  GenericChange(RationalMatrix a, std::uint64_t seed = 0, std::uint64_t bound = 0);

  const RationalMatrix& matrix() const noexcept { return a_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t bound() const noexcept { return bound_; }
  std::size_t nvars() const noexcept { return a_.rows(); }
  const Rational& determinant() const noexcept { return det_; }

  /// f_j for j = 0..n-1.
  const Polynomial& form(std::size_t j) const { return forms_.at(j); }
  /// f^b = Π f_j^{b_j}.
  Polynomial power(const Monomial& b) const;
  /// φ(p).
  Polynomial apply(const Polynomial& p) const;
  /// φ^{-1}(p) up to the nonzero scalar det(A)^{deg p} (substitution by the
  /// adjugate keeps integer inputs integral).
  Polynomial apply_inverse_scaled(const Polynomial& p) const;

 private:
  RationalMatrix a_;
  RationalMatrix adjugate_;
  Rational det_;
  std::uint64_t seed_;
  std::uint64_t bound_;
  std::vector<Polynomial> forms_;
};

/// Integer entries uniform in [-bound, bound] from Rng(seed); the whole
/// matrix is redrawn until it is invertible. Throws on bound < 1.
GenericChange random_change(std::size_t nvars, std::uint64_t seed, std::uint64_t bound);

struct GinConfig {
  std::uint64_t seed = 0;
  std::uint64_t bound = 1000;
  unsigned trials = 2;
  unsigned max_retries = 3;
  /// Prime for the modular pre-check, if any.
  std::optional<std::uint64_t> modp;
};

struct GinTrial {
  std::uint64_t seed;
  std::uint64_t bound;
  std::uint64_t fingerprint;
  /// Computed modulo the configured prime and compared against an exact trial.
  bool modular = false;
};

struct GinResult {
  MonomialIdeal gin{0};
  bool certified = false;
  std::vector<GinTrial> trials;
  TermOrder order = TermOrder::RevLex;
  /// Modular trials whose leading monomials disagreed with the exact ones.
  unsigned unlucky_primes = 0;
};

/// Trials disagreed, or the common result failed the stability check,
/// after all retries.
class GinUncertain : public std::runtime_error {
 public:
  GinUncertain(std::uint64_t seed, const std::string& what)
      : std::runtime_error(what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

/// ini(φ^{-1}(I)) for a given generic change.
MonomialIdeal initial_after_change(const IdealPresentation& ideal, TermOrder order, const GenericChange& change);

/// Seed of trial `t` in retry round `attempt`.
std::uint64_t trial_seed(std::uint64_t seed, unsigned attempt, unsigned trial);

/// Certified generic initial ideal. Throws GinUncertain.
GinResult gin(const IdealPresentation& ideal, TermOrder order, const GinConfig& config = {});
GinResult gin(const MonomialIdeal& ideal, TermOrder order, const GinConfig& config = {});

/// Degree-d part of ini(φ^{-1}(I)) from the Macaulay matrix of φ^{-1}(I),
/// without a Gröbner basis.
std::vector<Monomial> gin_slice(const IdealPresentation& ideal, TermOrder order, const GenericChange& change,
                                unsigned d);

/// d(a) = |Sh(a/x_min(a)) \ gin|, from a generic initial ideal. Requires |a| >= 1.
std::size_t d_value(const MonomialIdeal& gin, const Monomial& a);
/// d_I(a) from the certified RevLex gin of I.
std::size_t d_of(const IdealPresentation& ideal, const Monomial& a, const GinConfig& config = {});
/// min(a/x_min(a)) - min(a) + 1 <= d(a), evaluated on a gin.
bool not_in_gin_by_d(const MonomialIdeal& gin, const Monomial& a);
bool not_in_gin_by_d(const IdealPresentation& ideal, const Monomial& a, const GinConfig& config = {});

/// Which subspace of S_e stands for (S/I)_e in the kernel operations.
enum class KernelSpace {
  /// span of the monomials outside ini(I).
  StandardMonomials,
  /// I_e^⊥, the degree-e inverse system (annihilator under contraction).
  InverseSystem,
};

/// Span and kernel criteria for one ideal and one generic change, with the
/// Gröbner basis of I and the forms f^b cached. Not thread safe.
class SpanOracle {
 public:
  SpanOracle(const IdealPresentation& ideal, GenericChange change, KernelSpace space = KernelSpace::InverseSystem);
  ~SpanOracle();
  SpanOracle(SpanOracle&&) noexcept;
  SpanOracle& operator=(SpanOracle&&) noexcept;

  const GenericChange& change() const;
  KernelSpace space() const;

  /// f^a ∈ span{f^b : x^b <_rlex x^a, |b|=|a|} modulo I.
  bool gin_membership_span(const Monomial& a);

  /// Basis (rows over the degree-e monomials, RevLex-descending) of
  /// ⋂ Kern(τ_{f^b})_e over |b|=|a| with x^b < x^a (strict) or x^b ≤ x^a.
  std::vector<std::vector<Rational>> kernel_intersection(const Monomial& a, unsigned e, bool strict);
  std::size_t kernel_intersection_dim(const Monomial& a, unsigned e, bool strict);

  /// Basis of Kern(τ_{f^a})_e and of ⋂_j Kern(τ_{f^{a+ε_j}})_e.
  std::vector<std::vector<Rational>> kernel_of(const Monomial& a, unsigned e);
  std::vector<std::vector<Rational>> kernel_of_shifts(const Monomial& a, unsigned e);

  /// Basis of the space standing for (S/I)_e.
  const std::vector<std::vector<Rational>>& quotient_space(unsigned e);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Two subspaces given by spanning rows coincide.
bool same_span(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b,
               std::size_t cols);

}  // namespace ginshift
