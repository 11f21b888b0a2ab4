#pragma once

#include <cstddef>
#include <cstdint>

#include "ginshift/gin.hpp"
#include "ginshift/groebner.hpp"
#include "ginshift/monomial_ideal.hpp"

namespace ginshift {

/// K[x1..xn] ⊗ K[x_{n+1}..x_{n+m}]: block 1 is variables 1..n, block 2 is n+1..n+m.
class SplitRing {
 public:
  SplitRing(std::size_t n, std::size_t m);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t nvars() const noexcept { return n_ + m_; }
  RingContext ring() const { return RingContext(n_ + m_); }
  /// Support bitmasks of the two blocks.
  std::uint64_t block1() const noexcept { return (std::uint64_t{1} << n_) - 1; }
  std::uint64_t block2() const noexcept { return ((std::uint64_t{1} << m_) - 1) << n_; }

 private:
  std::size_t n_, m_;
};

/// (x1..xn)(x_{n+1}..x_{n+m}).
MonomialIdeal q_monomial_ideal(const SplitRing& split);
IdealPresentation q_ideal(const SplitRing& split);
/// (x1..xn) and (x_{n+1}..x_{n+m}) in the big ring.
MonomialIdeal block1_maximal(const SplitRing& split);
MonomialIdeal block2_maximal(const SplitRing& split);

/// I placed in block 1. Accepts I over n variables, or over n+m variables
/// using block 1 only; throws BlockViolation otherwise.
IdealPresentation embed_block1(const IdealPresentation& i, const SplitRing& split);
/// J placed in block 2. Accepts J over m variables (shifted by n), or over
/// n+m variables using block 2 only.
IdealPresentation embed_block2(const IdealPresentation& j, const SplitRing& split);
MonomialIdeal embed_block1(const MonomialIdeal& i, const SplitRing& split);
MonomialIdeal embed_block2(const MonomialIdeal& j, const SplitRing& split);

/// I + J + Q with the generators of I, then J, then Q.
IdealPresentation fibre_product_ideal(const IdealPresentation& i, const IdealPresentation& j, const SplitRing& split);
MonomialIdeal fibre_product_ideal(const MonomialIdeal& i, const MonomialIdeal& j, const SplitRing& split);

/// Generators concatenated; repeated generators (up to scalars) dropped.
IdealPresentation ideal_sum(const IdealPresentation& a, const IdealPresentation& b);
/// All pairwise products of generators, deduplicated up to scalars.
IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b);
/// a^k; a^0 is the unit ideal.
IdealPresentation ideal_power(const IdealPresentation& a, unsigned k);

/// Equality of ideals via reduced RevLex Gröbner bases.
bool same_ideal(const IdealPresentation& a, const IdealPresentation& b);

/// (x_i x_j : i <= j, i + j <= n+m, i <= min(n, m)).
MonomialIdeal gin_q_closed_form(const SplitRing& split);

/// Quadruples 1 <= i <= j <= h <= k <= n+m with j <= min(n,m), i+k <= n+m
/// and j+h <= n+m, counted by enumeration.
std::uint64_t count_w(const SplitRing& split);
/// Whether one quadruple satisfies the conditions of count_w.
bool w_condition(const SplitRing& split, std::size_t i, std::size_t j, std::size_t h, std::size_t k);

/// A vector-space basis of I_k, as generators.
IdealPresentation component_ideal(const IdealPresentation& ideal, unsigned k);
/// The ideal generated by the elements of I of degree <= k.
IdealPresentation truncation_ideal(const IdealPresentation& ideal, unsigned k);

struct Regularity {
  /// reg(I), the largest degree of a minimal generator of the RevLex gin.
  unsigned ideal;
  /// reg(T/I) = reg(I) - 1.
  int quotient;
};

/// Throws std::invalid_argument on the zero ideal; propagates GinUncertain.
Regularity regularity_via_gin(const IdealPresentation& ideal, const GinConfig& config = {});

/// reg(T/I_{<=k}) <= k-1 for every k from the least generator degree up to
/// reg(I). Requires every generator to have positive degree.
bool is_componentwise_linear(const IdealPresentation& ideal, const GinConfig& config = {});

}  // namespace ginshift
