#include <doctest.h>

#include <functional>

#include "ginshift/constructions.hpp"
#include "ginshift/errors.hpp"
#include "ginshift/linalg.hpp"
#include "ginshift/sampling.hpp"
#include "support.hpp"

using namespace ginshift;
using test::config;
using test::ideal;
using test::mono;
using test::monomials;

namespace {

// Independent regularity oracle for monomial ideals: β_{i,u}(I) is the
// reduced homology of the upper Koszul complex
//   K^u = { F ⊆ supp(u) squarefree : u / x^F ∈ I }
// in homological degree i-1, and reg(I) = max |u| - i over nonzero β_{i,u}.
std::size_t reduced_homology(const std::vector<std::uint32_t>& faces, int dim) {
  // Chain groups indexed by face size - 1, with the empty face in degree -1.
  auto chains = [&](int q) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t f : faces)
      if (std::popcount(f) == q + 1) out.push_back(f);
    return out;
  };
  auto boundary_rank = [&](int q) -> std::size_t {
    // ∂_q : C_q → C_{q-1}
    if (q < 0) return 0;
    const auto src = chains(q), dst = chains(q - 1);
    if (src.empty() || dst.empty()) return 0;
    std::vector<linalg::RationalRow> rows;
    for (std::uint32_t f : src) {
      linalg::RationalRow r(dst.size());
      int sign = 1;
      for (int v = 0; v < 32; ++v) {
        if (!(f >> v & 1)) continue;
        const std::uint32_t g = f & ~(std::uint32_t{1} << v);
        for (std::size_t k = 0; k < dst.size(); ++k)
          if (dst[k] == g) r[k] = sign;
        sign = -sign;
      }
      rows.push_back(std::move(r));
    }
    return linalg::rank(rows, dst.size());
  };
  const std::size_t c = chains(dim).size();
  return c - boundary_rank(dim) - boundary_rank(dim + 1);
}

unsigned betti_regularity(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  std::vector<int> top(n, 0);
  for (const Monomial& g : ideal.generators())
    for (std::size_t v = 0; v < n; ++v) top[v] = std::max<int>(top[v], static_cast<int>(g[v]));
  int best = -1000;
  std::vector<int> u(n, 0);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    if (v < n) {
      for (int e = 0; e <= top[v]; ++e) {
        u[v] = e;
        visit(v + 1);
      }
      return;
    }
    std::uint32_t support = 0;
    int degree = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (u[k] > 0) support |= std::uint32_t{1} << k;
      degree += u[k];
    }
    std::vector<std::uint32_t> faces;
    for (std::uint32_t f = 0; f < (std::uint32_t{1} << n); ++f) {
      if ((f & ~support) != 0) continue;
      std::vector<int> w = u;
      for (std::size_t k = 0; k < n; ++k)
        if (f >> k & 1) --w[k];
      if (ideal.contains(Monomial::from_exponents(w))) faces.push_back(f);
    }
    if (faces.empty()) return;
    for (int i = 0; i <= static_cast<int>(n); ++i)
      if (reduced_homology(faces, i - 1) != 0) best = std::max(best, degree - i);
  };
  visit(0);
  return static_cast<unsigned>(best);
}

MonomialIdeal component(const MonomialIdeal& m, unsigned k) { return MonomialIdeal(m.nvars(), m.slice(k)); }

bool betti_componentwise_linear(const MonomialIdeal& m) {
  for (unsigned k = m.min_generator_degree(); k <= m.max_generator_degree(); ++k) {
    const MonomialIdeal c = component(m, k);
    if (!c.is_zero() && betti_regularity(c) != k) return false;
  }
  return true;
}

MonomialIdeal random_monomial_ideal(Rng& rng, std::size_t n, unsigned max_deg) {
  std::vector<Monomial> ms;
  const auto count = rng.uniform(1, 4);
  for (std::int64_t k = 0; k < count; ++k)
    ms.push_back(test::random_monomial(rng, n, static_cast<unsigned>(rng.uniform(1, max_deg))));
  return MonomialIdeal(n, std::move(ms));
}

}  // namespace

TEST_CASE("the Betti oracle on known resolutions") {
  CHECK(betti_regularity(monomials(2, {"x1^2", "x2^3"})) == 4);
  CHECK(betti_regularity(MonomialIdeal::maximal(3)) == 1);
  CHECK(betti_regularity(monomials(2, {"x1*x2"})) == 2);
  CHECK(betti_regularity(monomials(3, {"x1*x2", "x2*x3"})) == 2);
  CHECK(betti_regularity(monomials(4, {"x1*x2", "x3*x4"})) == 3);
}

TEST_CASE("Q and the block ideals") {
  CHECK(q_monomial_ideal(SplitRing(1, 1)) == monomials(2, {"x1*x2"}));
  CHECK(q_monomial_ideal(SplitRing(2, 2)) == monomials(4, {"x1*x3", "x1*x4", "x2*x3", "x2*x4"}));
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = 1; m <= 5; ++m) {
      CHECK(q_monomial_ideal(SplitRing(n, m)).generators().size() == n * m);
      CHECK(q_ideal(SplitRing(n, m)).generators().size() == n * m);
    }
  CHECK(block1_maximal(SplitRing(2, 3)) == monomials(5, {"x1", "x2"}));
  CHECK(block2_maximal(SplitRing(2, 3)) == monomials(5, {"x3", "x4", "x5"}));
  CHECK_THROWS_AS(SplitRing(0, 2), std::invalid_argument);
}

TEST_CASE("embedding and fibre products") {
  const SplitRing sp(2, 3);
  CHECK(embed_block2(ideal(3, {"x1^2", "x2*x3"}), sp).generators() ==
        ideal(5, {"x3^2", "x4*x5"}).generators());
  CHECK_THROWS_AS(embed_block1(ideal(5, {"x1*x3"}), sp), BlockViolation);
  CHECK(embed_block1(ideal(5, {"x1*x2"}), sp).generators() == ideal(5, {"x1*x2"}).generators());

  const IdealPresentation zero2(RingContext(2), {}), zero3(RingContext(3), {});
  CHECK(same_ideal(fibre_product_ideal(zero2, zero3, sp), q_ideal(sp)));
  const IdealPresentation i = ideal(2, {"x1^2", "x1*x2", "x2^2"});
  const IdealPresentation j = ideal(3, {"x1^2", "x1*x2", "x2*x3"});
  CHECK(fibre_product_ideal(i, j, sp).generators().size() == 12);
  const IdealPresentation sq = fibre_product_ideal(ideal(2, {"x1^2", "x1*x2", "x2^2"}),
                                                  ideal(3, {"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"}), sp);
  for (const auto& g : sq.generators()) CHECK(*g.homogeneous_degree() == 2);
  CHECK(same_ideal(ideal_sum(sq, q_ideal(sp)), sq));
  CHECK(fibre_product_ideal(monomials(2, {"x1^2"}), monomials(3, {"x3^2"}), sp) ==
        monomials(5, {"x1^2", "x5^2"}) + q_monomial_ideal(sp));
}

TEST_CASE("sums, products and powers") {
  const SplitRing one(1, 1);
  CHECK(same_ideal(ideal_power(q_ideal(one), 1), q_ideal(one)));
  CHECK(same_ideal(ideal_product(ideal(2, {"x1^2"}), ideal(2, {"x2"})), ideal(2, {"x1^2*x2"})));
  CHECK(same_ideal(ideal_power(q_ideal(one), 2), ideal(2, {"x1^2*x2^2"})));
  CHECK(ideal_power(ideal(2, {"x1"}), 0).generators().size() == 1);
  CHECK(same_ideal(ideal_sum(ideal(2, {"x1^2"}), ideal(2, {"x1^2", "x2^2"})), ideal(2, {"x2^2", "x1^2"})));
  CHECK(!same_ideal(ideal(2, {"x1^2"}), ideal(2, {"x2^2"})));
}

TEST_CASE("closed form of gin(Q) and the quadruple count") {
  CHECK(gin_q_closed_form(SplitRing(1, 1)) == monomials(2, {"x1^2"}));
  CHECK(gin_q_closed_form(SplitRing(2, 2)) == monomials(4, {"x1^2", "x1*x2", "x1*x3", "x2^2"}));
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = 1; m <= 5; ++m)
      CHECK(gin_q_closed_form(SplitRing(n, m)).generators().size() == n * m);
  CHECK(count_w(SplitRing(1, 1)) == 1);
  CHECK(count_w(SplitRing(2, 2)) == 9);
  CHECK(count_w(SplitRing(2, 3)) == 18);
  CHECK(w_condition(SplitRing(1, 1), 1, 1, 1, 1));
  CHECK(!w_condition(SplitRing(1, 1), 1, 1, 1, 2));
}

TEST_CASE("components and truncations") {
  const IdealPresentation i = ideal(2, {"x1^2", "x2^3"});
  CHECK(same_ideal(truncation_ideal(i, 2), ideal(2, {"x1^2"})));
  CHECK(truncation_ideal(ideal(3, {"x1^2", "x2*x3"}), 1).is_zero());
  CHECK(same_ideal(component_ideal(i, 3), ideal(2, {"x1^3", "x1^2*x2", "x2^3"})));
  CHECK(component_ideal(i, 1).is_zero());
  CHECK(same_ideal(truncation_ideal(ideal(2, {"x1*x2", "x1*x2 + x2^2", "x1^3"}), 2), ideal(2, {"x1*x2", "x2^2"})));
}

TEST_CASE("regularity and componentwise linearity") {
  CHECK(regularity_via_gin(ideal(3, {"x1", "x2", "x3"})).ideal == 1);
  CHECK(regularity_via_gin(ideal(2, {"x1^2 - x2^2", "x1*x2"})).ideal == 3);
  CHECK(regularity_via_gin(ideal(2, {"x1^2 - x2^2", "x1*x2"})).quotient == 2);
  CHECK(regularity_via_gin(ideal(2, {"x1^2", "x1*x2", "x2^3"})).ideal == 3);
  CHECK(regularity_via_gin(ideal(2, {"x1^2", "x2^3"})).ideal == 4);
  CHECK_THROWS_AS(regularity_via_gin(IdealPresentation(RingContext(2), {})), std::invalid_argument);
  CHECK(is_componentwise_linear(ideal(3, {"x1", "x2", "x3"})));
  CHECK(is_componentwise_linear(ideal(2, {"x1^2", "x1*x2", "x2^3"})));
  CHECK(!is_componentwise_linear(ideal(2, {"x1^2", "x2^3"})));
  CHECK(!betti_componentwise_linear(monomials(2, {"x1^2", "x2^3"})));
  CHECK(is_componentwise_linear(IdealPresentation(RingContext(2), {})));
}

TEST_CASE("strong stability examples") {
  CHECK(is_strongly_stable(monomials(2, {"x1^2", "x1*x2", "x2^2"})));
  CHECK(!is_strongly_stable(monomials(2, {"x1*x2"})));
}

// Properties ---------------------------------------------------------------

TEST_CASE("regularity via gin matches the Betti oracle on monomial ideals") {
  for (std::uint64_t k = 0; k < 40; ++k) {
    Rng rng(derive_seed(61, {k}));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const MonomialIdeal m = random_monomial_ideal(rng, n, 4);
    INFO("ideal " << to_string(m));
    CHECK(regularity_via_gin(IdealPresentation(m), config(k)).ideal == betti_regularity(m));
    CHECK(is_componentwise_linear(IdealPresentation(m), config(k)) == betti_componentwise_linear(m));
  }
}

TEST_CASE("truncations of fibre products split") {
  for (std::uint64_t k = 0; k < 15; ++k) {
    Rng rng(derive_seed(62, {k}));
    const SplitRing sp(static_cast<std::size_t>(rng.uniform(1, 3)), static_cast<std::size_t>(rng.uniform(1, 3)));
    const IdealPresentation i = random_ideal(sp.n(), 3, rng.next());
    const IdealPresentation j = random_ideal(sp.m(), 3, rng.next());
    const IdealPresentation f = fibre_product_ideal(i, j, sp);
    CHECK(truncation_ideal(f, 1).is_zero());
    for (unsigned t = 2; t <= 4; ++t) {
      const IdealPresentation split = ideal_sum(
          ideal_sum(embed_block1(truncation_ideal(i, t), sp), embed_block2(truncation_ideal(j, t), sp)), q_ideal(sp));
      CHECK(same_ideal(truncation_ideal(f, t), split));
    }
  }
}

TEST_CASE("gin(Q) and its powers for small blocks") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m) {
      const SplitRing sp(n, m);
      const MonomialIdeal g = gin(q_ideal(sp), TermOrder::RevLex, config(n * 10 + m)).gin;
      CHECK(g == gin_q_closed_form(sp));
      if (n + m <= 4) CHECK(gin(ideal_power(q_ideal(sp), 2), TermOrder::RevLex, config(n + m)).gin == power(g, 2));
    }
}
