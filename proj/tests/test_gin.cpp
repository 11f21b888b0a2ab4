#include <doctest.h>

#include "ginshift/constructions.hpp"
#include "ginshift/gin.hpp"
#include "ginshift/linalg.hpp"
#include "ginshift/sampling.hpp"
#include "support.hpp"

using namespace ginshift;
using test::config;
using test::ideal;
using test::mono;
using test::monomials;
using test::poly;

TEST_CASE("random changes") {
  CHECK(random_change(3, 5, 10).matrix() == random_change(3, 5, 10).matrix());
  CHECK(random_change(3, 5, 10).matrix() != random_change(3, 6, 10).matrix());
  const GenericChange one = random_change(1, 9, 1);
  CHECK(one.matrix()(0, 0) != 0);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const GenericChange c = random_change(3, s, 1);
    CHECK(c.determinant() != 0);
    CHECK(c.determinant() == linalg::determinant(c.matrix()));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(abs(c.matrix()(i, j)) <= 1);
  }
  CHECK_THROWS_AS(random_change(2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(GenericChange(RationalMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("generic change forms and inverse") {
  const GenericChange c(RationalMatrix{{2, 1}, {1, 1}});
  CHECK(c.form(0) == poly("2*x1 + x2", 2));
  CHECK(c.form(1) == poly("x1 + x2", 2));
  CHECK(c.power(mono("x1*x2", 2)) == poly("2*x1^2 + 3*x1*x2 + x2^2", 2));
  const Polynomial p = poly("x1^2 - 3*x1*x2", 2);
  CHECK(c.apply(p) == poly("-2*x1^2 - 5*x1*x2 - 2*x2^2", 2));
  const Rational det2 = c.determinant() * c.determinant();
  CHECK(c.apply(c.apply_inverse_scaled(p)) == det2 * p);
}

TEST_CASE("gin examples") {
  CHECK(gin(ideal(2, {"x1*x2"}), TermOrder::RevLex).gin == monomials(2, {"x1^2"}));
  CHECK(gin(ideal(3, {"x1^2", "x1*x2", "x2*x3"}), TermOrder::RevLex).gin == monomials(3, {"x1^2", "x1*x2", "x2^2"}));
  CHECK(gin(monomials(2, {"x1^2", "x1*x2"}), TermOrder::RevLex).gin == monomials(2, {"x1^2", "x1*x2"}));
  CHECK(gin(IdealPresentation(RingContext(3), {}), TermOrder::RevLex).gin.is_zero());
  CHECK(gin(ideal(2, {"x1", "x2"}), TermOrder::RevLex).gin == MonomialIdeal::maximal(2));
  // A generic complete intersection of two quadrics in three variables.
  CHECK(gin(ideal(3, {"x1^2", "x2^2"}), TermOrder::RevLex).gin == monomials(3, {"x1^2", "x1*x2", "x2^3"}));
}

TEST_CASE("gin results are deterministic and record their trials") {
  const IdealPresentation i = ideal(3, {"x1^2 - x2*x3", "x1*x3 + 2*x2^2"});
  const GinResult a = gin(i, TermOrder::RevLex, config(77));
  const GinResult b = gin(i, TermOrder::RevLex, config(77));
  CHECK(a.gin == b.gin);
  CHECK(a.certified);
  REQUIRE(a.trials.size() == 2);
  REQUIRE(b.trials.size() == 2);
  for (std::size_t t = 0; t < 2; ++t) {
    CHECK(a.trials[t].seed == b.trials[t].seed);
    CHECK(a.trials[t].fingerprint == b.trials[t].fingerprint);
    CHECK(a.trials[t].seed == trial_seed(77, 0, static_cast<unsigned>(t)));
  }
  CHECK(gin(i, TermOrder::RevLex, config(78)).gin == a.gin);
}

TEST_CASE("the modular pre-check agrees with the exact gin") {
  const IdealPresentation i = ideal(3, {"x1^2 - x2*x3", "x1*x3 + 2*x2^2"});
  GinConfig c = config(3);
  c.modp = 2305843009213693951ull;
  const GinResult r = gin(i, TermOrder::RevLex, c);
  CHECK(r.gin == gin(i, TermOrder::RevLex, config(3)).gin);
  REQUIRE(r.trials.size() == 2);
  CHECK(!r.trials[0].modular);
  CHECK(r.trials[1].modular);
  CHECK(r.unlucky_primes == 0);
}

TEST_CASE("uncertain gins carry their seed") {
  // Entries in {-1, 0, 1} and many trials: some trial meets a special change.
  GinConfig c = config(5);
  c.bound = 1;
  c.trials = 40;
  c.max_retries = 0;
  try {
    (void)gin(ideal(3, {"x1*x2", "x2*x3"}), TermOrder::RevLex, c);
    FAIL("expected GinUncertain");
  } catch (const GinUncertain& e) {
    CHECK(e.seed() == 5);
    CHECK(std::string(e.what()).find("seed 5") != std::string::npos);
  }
}

TEST_CASE("gin slices from the Macaulay matrix") {
  const IdealPresentation i = ideal(3, {"x1^2 - x2*x3", "x1*x3 + 2*x2^2"});
  const GenericChange change = random_change(3, 17, 1000);
  const MonomialIdeal ini = initial_after_change(i, TermOrder::RevLex, change);
  for (unsigned d = 0; d <= 5; ++d) {
    auto s = gin_slice(i, TermOrder::RevLex, change, d);
    std::sort(s.begin(), s.end(), DescendingIn{TermOrder::RevLex});
    CHECK(s == ini.slice(d));
  }
}

TEST_CASE("d-values") {
  const SplitRing sp(2, 2);
  const IdealPresentation q = q_ideal(sp);
  CHECK(d_of(q, mono("x1*x3", 4)) == 2);
  CHECK(d_of(IdealPresentation(RingContext(2), {}), mono("x1^2", 2)) == 1);
  CHECK(!not_in_gin_by_d(q, mono("x1*x3", 4)));
  CHECK(not_in_gin_by_d(q, mono("x2*x4", 4)));
  CHECK(d_value(gin_q_closed_form(sp), mono("x2*x4", 4)) == 4);
}

TEST_CASE("span and kernel criteria on small cases") {
  SpanOracle o(ideal(2, {"x1*x2"}), random_change(2, 4, 1000));
  CHECK(o.gin_membership_span(mono("x1^2", 2)));
  CHECK(!o.gin_membership_span(mono("x1*x2", 2)));
  CHECK(o.kernel_intersection_dim(mono("x1*x2", 2), 2, true) == 1);

  SpanOracle zero(IdealPresentation(RingContext(3), {}), random_change(3, 4, 1000));
  for (unsigned d = 1; d <= 3; ++d) {
    for (const auto& a : monomials_of_degree(3, d, TermOrder::RevLex)) CHECK(!zero.gin_membership_span(a));
    // No b lies below the smallest monomial; every other b lies below the largest.
    const auto all = monomials_of_degree(3, d, TermOrder::RevLex);
    CHECK(zero.kernel_intersection_dim(all.back(), d, true) == all.size());
    CHECK(zero.kernel_intersection_dim(all.front(), d, true) == 1);
  }
  CHECK(zero.quotient_space(2).size() == 6);

  SpanOracle std_space(ideal(2, {"x1*x2"}), random_change(2, 4, 1000), KernelSpace::StandardMonomials);
  CHECK(std_space.space() == KernelSpace::StandardMonomials);
  CHECK(std_space.quotient_space(2).size() == 2);
}

TEST_CASE("same_span") {
  using Row = std::vector<Rational>;
  CHECK(same_span({Row{1, 0}, Row{0, 1}}, {Row{1, 1}, Row{1, -1}}, 2));
  CHECK(!same_span({Row{1, 0}}, {Row{0, 1}}, 2));
  CHECK(same_span({}, {Row{0, 0}}, 2));
}

// Properties ---------------------------------------------------------------

TEST_CASE("gin properties on random ideals") {
  for (std::uint64_t k = 0; k < 25; ++k) {
    Rng rng(derive_seed(51, {k}));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const IdealPresentation i = random_ideal(n, 3, rng.next());
    const std::uint64_t seed = rng.next();
    INFO("sample " << k << ", seed " << seed);
    const MonomialIdeal g = gin(i, TermOrder::RevLex, config(seed)).gin;
    CHECK(is_strongly_stable(g));
    CHECK(gin(g, TermOrder::RevLex, config(seed + 1)).gin == g);
    for (unsigned d = 0; d <= 5; ++d) CHECK(hilbert_dim(g, d) == hilbert_dim(i, d));

    SpanOracle oracle(i, random_change(n, rng.next(), 1000));
    for (unsigned d = 1; d <= 4; ++d)
      for (const Monomial& a : monomials_of_degree(n, d, TermOrder::RevLex)) {
        CHECK(oracle.gin_membership_span(a) == g.contains(a));
        if (d > 3) continue;
        std::size_t above = 0;
        for (const Monomial& c : g.standard_monomials(d))
          if (compare(TermOrder::RevLex, a, c) != std::strong_ordering::greater) ++above;
        CHECK(oracle.kernel_intersection_dim(a, d, true) == above);
        std::size_t sh = 0;
        for (const Monomial& b : shadow(a)) sh += !g.contains(b);
        CHECK(oracle.kernel_intersection_dim(a, d + 1, true) - oracle.kernel_intersection_dim(a, d + 1, false) == sh);
        CHECK(same_span(oracle.kernel_of(a, d + 1), oracle.kernel_of_shifts(a, d + 1),
                        monomials_of_degree(n, d + 1, TermOrder::RevLex).size()));
        if (d >= 2) {
          CHECK(not_in_gin_by_d(g, a) == !g.contains(a));
          CHECK(d_value(g, a) == d_value(gin(g, TermOrder::RevLex, config(seed + 2)).gin, a));
        }
      }
  }
}

TEST_CASE("lex gins are Borel-fixed and idempotent") {
  for (std::uint64_t k = 0; k < 15; ++k) {
    Rng rng(derive_seed(52, {k}));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const IdealPresentation i = random_ideal(n, 3, rng.next());
    const MonomialIdeal g = gin(i, TermOrder::Lex, config(k)).gin;
    CHECK(is_strongly_stable(g));
    CHECK(gin(g, TermOrder::Lex, config(k + 100)).gin == g);
  }
}
