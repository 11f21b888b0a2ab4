#include <doctest.h>

#include <algorithm>

#include "ginshift/errors.hpp"
#include "ginshift/linalg.hpp"
#include "support.hpp"

using namespace ginshift;
using test::mono;
using test::poly;

TEST_CASE("revlex compares degree first, then the last differing exponent") {
  CHECK(compare(TermOrder::RevLex, mono("x2^2", 3), mono("x1*x3", 3)) == std::strong_ordering::greater);
  CHECK(compare(TermOrder::RevLex, mono("x1", 3), mono("x2", 3)) == std::strong_ordering::greater);
  CHECK(compare(TermOrder::RevLex, mono("x1^2", 3), mono("x3", 3)) == std::strong_ordering::greater);
  CHECK(compare(TermOrder::Lex, mono("x1*x3", 3), mono("x2^2", 3)) == std::strong_ordering::greater);
}

TEST_CASE("degree-2 monomials in three variables, sorted by hand") {
  const auto ms = monomials_of_degree(3, 2, TermOrder::RevLex);
  std::vector<std::string> names;
  for (const auto& m : ms) names.push_back(to_string(m));
  CHECK(names == std::vector<std::string>{"x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"});
  const auto lex = monomials_of_degree(3, 2, TermOrder::Lex);
  names.clear();
  for (const auto& m : lex) names.push_back(to_string(m));
  CHECK(names == std::vector<std::string>{"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"});
}

TEST_CASE("contraction") {
  CHECK(contract(poly("x1", 3), poly("x1*x2", 3)) == poly("x2", 3));
  CHECK(contract(poly("x1^2", 3), poly("x1*x2", 3)).is_zero());
  const Polynomial l = poly("x1*x2*x3", 3);
  CHECK(contract(poly("x1*x2", 3), l) == poly("x3", 3));
  CHECK(contract(poly("x1", 3), contract(poly("x2", 3), l)) == poly("x3", 3));
  CHECK(contract(poly("x1 + x2", 2), poly("x1^2 + 3*x1*x2", 2)) == poly("x1 + 3*x2 + 3*x1", 2));
}

TEST_CASE("min_index and shadows") {
  CHECK(min_index(mono("x2*x5", 5)) == 2);
  CHECK(min_index(Monomial(5)) == 1);
  CHECK(min_index(mono("x4^3", 5)) == 4);
  const auto sh = shadow(mono("x2", 3));
  REQUIRE(sh.size() == 2);
  CHECK(sh[0] == mono("x1*x2", 3));
  CHECK(sh[1] == mono("x2^2", 3));
  CHECK(shadow(mono("x1^2", 3)) == std::vector<Monomial>{mono("x1^3", 3)});
  CHECK(shadow(Monomial(3)) == std::vector<Monomial>{mono("x1", 3)});
}

TEST_CASE("polynomial arithmetic and substitution") {
  CHECK(poly("x1 + x2", 2) * poly("x1 - x2", 2) == poly("x1^2 - x2^2", 2));
  const Polynomial f = poly("3*x1^2 - x1*x2 + 7*x2^2", 2);
  CHECK(substitute_linear(f, RationalMatrix::identity(2)) == f);
  const RationalMatrix m{{1, 1}, {0, 1}};
  CHECK(substitute_linear(poly("x2", 2), m) == poly("x1 + x2", 2));
  CHECK(substitute_linear(poly("x1", 2), m) == poly("x1", 2));
  CHECK_THROWS_AS(substitute_linear(f, RationalMatrix::identity(3)), std::invalid_argument);
  CHECK(power(poly("x1 + x2", 2), 0) == Polynomial::constant(2, 1));
  CHECK(power(poly("x1 + x2", 2), 2) == poly("x1^2 + 2*x1*x2 + x2^2", 2));
}

TEST_CASE("embedding relabels variables") {
  CHECK(embed(poly("x1*x2", 2), 2, 5) == poly("x3*x4", 5));
  CHECK(embed(poly("x1^2 + x2", 2), 0, 2) == poly("x1^2 + x2", 2));
  CHECK(embed(poly("x1^2 + x2", 2), 3, 5) == poly("x4^2 + x5", 5));
  CHECK_THROWS_AS(embed(poly("x1*x2", 2), 4, 5), std::out_of_range);
}

TEST_CASE("polynomial text round trip") {
  for (const char* s : {"x1^2", "x1*x2^3 - 2/3*x3", "-x2", "0", "5"}) CHECK(to_string(poly(s, 3)) == s);
  CHECK_THROWS_AS(poly("x4", 3), ParseError);
  CHECK_THROWS_AS(poly("x1 +", 3), ParseError);
  CHECK_THROWS_AS(poly("x1^", 3), ParseError);
  try {
    (void)parse_polynomial("x1 * y", 2, 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("exact linear algebra") {
  const RationalMatrix m{{2, 1}, {1, 1}};
  CHECK(linalg::determinant(m) == 1);
  CHECK(linalg::inverse(m) * m == RationalMatrix::identity(2));
  CHECK_THROWS_AS(linalg::inverse(RationalMatrix{{1, 2}, {2, 4}}), std::domain_error);
  const std::vector<linalg::RationalRow> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(linalg::rank(rows, 3) == 2);
  CHECK(linalg::pivot_columns(rows, 3) == std::vector<std::size_t>{0, 1});
  const auto kernel = linalg::nullspace(rows, 3);
  REQUIRE(kernel.size() == 1);
  for (const auto& r : rows) {
    Rational dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += r[j] * kernel[0][j];
    CHECK(dot == 0);
  }
  CHECK(linalg::nullspace({}, 2).size() == 2);
  CHECK(linalg::in_row_span({1, 3, 4}, rows, 3));
  CHECK(!linalg::in_row_span({0, 0, 1}, rows, 3));
}

// Properties ---------------------------------------------------------------

TEST_CASE("monomial orders are total and multiplicative") {
  for (TermOrder order : {TermOrder::RevLex, TermOrder::Lex})
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<Monomial> all;
      for (unsigned d = 0; d <= 4; ++d)
        for (auto& m : monomials_of_degree(n, d, order)) all.push_back(m);
      // Exhaustive antisymmetry, sampled transitivity.
      Rng rng(derive_seed(11, {n, static_cast<std::uint64_t>(order)}));
      for (const auto& a : all)
        for (const auto& b : all) {
          const auto ab = compare(order, a, b), ba = compare(order, b, a);
          CHECK((ab == std::strong_ordering::equal) == (a == b));
          CHECK((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater));
          const auto& c = all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
          if (ab == std::strong_ordering::greater && compare(order, b, c) == std::strong_ordering::greater)
            CHECK(compare(order, a, c) == std::strong_ordering::greater);
        }
    }
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto d = static_cast<unsigned>(rng.uniform(0, 4));
    const Monomial u = test::random_monomial(rng, n, d), v = test::random_monomial(rng, n, d);
    const Monomial w = test::random_monomial(rng, n, static_cast<unsigned>(rng.uniform(0, 4)));
    for (TermOrder order : {TermOrder::RevLex, TermOrder::Lex})
      if (compare(order, u, v) == std::strong_ordering::less)
        CHECK(compare(order, u * w, v * w) == std::strong_ordering::less);
  }
}

TEST_CASE("contraction composes") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Polynomial g = Polynomial::from_monomial(test::random_monomial(rng, n, static_cast<unsigned>(rng.uniform(0, 2))));
    const Polynomial h = Polynomial::from_monomial(test::random_monomial(rng, n, static_cast<unsigned>(rng.uniform(0, 2))));
    const Polynomial l = test::random_polynomial(rng, n, 4, 4, false);
    CHECK(contract(g * h, l) == contract(g, contract(h, l)));
  }
}

TEST_CASE("substituting a matrix and then its inverse is the identity") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const RationalMatrix m = test::random_invertible(rng, n);
    const Polynomial p = test::random_polynomial(rng, n, 3, 4, false);
    CHECK(substitute_linear(substitute_linear(p, m), linalg::inverse(m)) == p);
  }
}

TEST_CASE("shadow size and bounds") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 0; d <= 4; ++d)
      for (const auto& a : monomials_of_degree(n, d, TermOrder::RevLex)) {
        const auto sh = shadow(a);
        CHECK(sh.size() == min_index(a));
        for (const auto& b : sh) {
          CHECK(compare(TermOrder::RevLex, min_shadow(a), b) != std::strong_ordering::greater);
          CHECK(compare(TermOrder::RevLex, b, max_shadow(a)) != std::strong_ordering::greater);
        }
      }
}
