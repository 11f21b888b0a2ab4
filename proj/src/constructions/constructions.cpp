#include "ginshift/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ginshift/errors.hpp"
#include "ginshift/linalg.hpp"
#include "ginshift/poly_io.hpp"

namespace ginshift {

namespace {

std::vector<Polynomial> dedup_up_to_scalar(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  std::vector<Polynomial> seen;
  for (Polynomial& g : gens) {
    Polynomial key = g.monic();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    out.push_back(std::move(g));
  }
  return out;
}

void check_block(const Polynomial& g, std::uint64_t allowed, const char* which) {
  if ((support(g) & ~allowed) != 0)
    throw BlockViolation(std::string("generator ") + to_string(g) + " uses variables outside " + which);
}

}  // namespace

SplitRing::SplitRing(std::size_t n, std::size_t m) : n_(n), m_(m) {
  if (n == 0 || m == 0) throw std::invalid_argument("split ring blocks must be nonempty");
  if (n + m > Monomial::kMaxVars) throw std::invalid_argument("split ring has too many variables");
}

MonomialIdeal q_monomial_ideal(const SplitRing& split) {
  const std::size_t N = split.nvars();
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < split.n(); ++i)
    for (std::size_t j = split.n(); j < N; ++j) gens.push_back(Monomial::variable(N, i) * Monomial::variable(N, j));
  return MonomialIdeal(N, std::move(gens));
}

IdealPresentation q_ideal(const SplitRing& split) {
  const std::size_t N = split.nvars();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < split.n(); ++i)
    for (std::size_t j = split.n(); j < N; ++j)
      gens.push_back(Polynomial::from_monomial(Monomial::variable(N, i) * Monomial::variable(N, j)));
  return IdealPresentation(split.ring(), std::move(gens));
}

MonomialIdeal block1_maximal(const SplitRing& split) {
  return embed(MonomialIdeal::maximal(split.n()), 0, split.nvars());
}

MonomialIdeal block2_maximal(const SplitRing& split) {
  return embed(MonomialIdeal::maximal(split.m()), split.n(), split.nvars());
}

IdealPresentation embed_block1(const IdealPresentation& i, const SplitRing& split) {
  std::vector<Polynomial> gens;
  if (i.nvars() == split.n()) {
    for (const Polynomial& g : i.generators()) gens.push_back(embed(g, 0, split.nvars()));
  } else if (i.nvars() == split.nvars()) {
    for (const Polynomial& g : i.generators()) {
      check_block(g, split.block1(), "block 1");
      gens.push_back(g);
    }
  } else {
    throw ContextMismatch("first factor must live in " + std::to_string(split.n()) + " or " +
                          std::to_string(split.nvars()) + " variables");
  }
  return IdealPresentation(split.ring(), std::move(gens));
}

IdealPresentation embed_block2(const IdealPresentation& j, const SplitRing& split) {
  std::vector<Polynomial> gens;
  if (j.nvars() == split.m() && split.m() != split.nvars()) {
    for (const Polynomial& g : j.generators()) gens.push_back(embed(g, split.n(), split.nvars()));
  } else if (j.nvars() == split.nvars()) {
    for (const Polynomial& g : j.generators()) {
      check_block(g, split.block2(), "block 2");
      gens.push_back(g);
    }
  } else {
    throw ContextMismatch("second factor must live in " + std::to_string(split.m()) + " or " +
                          std::to_string(split.nvars()) + " variables");
  }
  return IdealPresentation(split.ring(), std::move(gens));
}

MonomialIdeal embed_block1(const MonomialIdeal& i, const SplitRing& split) {
  if (i.nvars() == split.nvars()) {
    for (const Monomial& g : i.generators())
      if ((g.support() & ~split.block1()) != 0) throw BlockViolation("generator " + to_string(g) + " leaves block 1");
    return i;
  }
  if (i.nvars() != split.n()) throw ContextMismatch("first factor in the wrong ring");
  return embed(i, 0, split.nvars());
}

MonomialIdeal embed_block2(const MonomialIdeal& j, const SplitRing& split) {
  if (j.nvars() == split.nvars()) {
    for (const Monomial& g : j.generators())
      if ((g.support() & ~split.block2()) != 0) throw BlockViolation("generator " + to_string(g) + " leaves block 2");
    return j;
  }
  if (j.nvars() != split.m()) throw ContextMismatch("second factor in the wrong ring");
  return embed(j, split.n(), split.nvars());
}

IdealPresentation fibre_product_ideal(const IdealPresentation& i, const IdealPresentation& j, const SplitRing& split) {
  return ideal_sum(ideal_sum(embed_block1(i, split), embed_block2(j, split)), q_ideal(split));
}

MonomialIdeal fibre_product_ideal(const MonomialIdeal& i, const MonomialIdeal& j, const SplitRing& split) {
  return embed_block1(i, split) + embed_block2(j, split) + q_monomial_ideal(split);
}

IdealPresentation ideal_sum(const IdealPresentation& a, const IdealPresentation& b) {
  if (a.nvars() != b.nvars()) throw ContextMismatch("sum of ideals from different rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return IdealPresentation(a.ring(), dedup_up_to_scalar(std::move(gens)));
}

IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b) {
  if (a.nvars() != b.nvars()) throw ContextMismatch("product of ideals from different rings");
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators())
    for (const Polynomial& g : b.generators()) gens.push_back(f * g);
  return IdealPresentation(a.ring(), dedup_up_to_scalar(std::move(gens)));
}

IdealPresentation ideal_power(const IdealPresentation& a, unsigned k) {
  IdealPresentation result(a.ring(), {Polynomial::constant(a.nvars(), 1)});
  for (unsigned e = 0; e < k; ++e) result = ideal_product(result, a);
  return result;
}

bool same_ideal(const IdealPresentation& a, const IdealPresentation& b) {
  if (a.nvars() != b.nvars()) return false;
  return buchberger(a, TermOrder::RevLex) == buchberger(b, TermOrder::RevLex);
}

MonomialIdeal gin_q_closed_form(const SplitRing& split) {
  const std::size_t N = split.nvars();
  const std::size_t lim = std::min(split.n(), split.m());
  std::vector<Monomial> gens;
  for (std::size_t i = 1; i <= lim; ++i)
    for (std::size_t j = i; i + j <= N; ++j) gens.push_back(Monomial::variable(N, i - 1) * Monomial::variable(N, j - 1));
  return MonomialIdeal(N, std::move(gens));
}

bool w_condition(const SplitRing& split, std::size_t i, std::size_t j, std::size_t h, std::size_t k) {
  const std::size_t N = split.nvars();
  return 1 <= i && i <= j && j <= h && h <= k && k <= N && j <= std::min(split.n(), split.m()) && i + k <= N &&
         j + h <= N;
}

std::uint64_t count_w(const SplitRing& split) {
  const std::size_t N = split.nvars();
  std::uint64_t count = 0;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i; j <= N; ++j)
      for (std::size_t h = j; h <= N; ++h)
        for (std::size_t k = h; k <= N; ++k)
          if (w_condition(split, i, j, h, k)) ++count;
  return count;
}

IdealPresentation component_ideal(const IdealPresentation& ideal, unsigned k) {
  const std::size_t n = ideal.nvars();
  std::vector<Polynomial> gens;
  if (!ideal.is_zero()) {
    const std::vector<Monomial> columns = monomials_of_degree(n, k, TermOrder::RevLex);
    std::vector<linalg::IntegerRow> rows;
    for (const auto& r : macaulay_matrix(ideal, TermOrder::RevLex, k)) rows.push_back(linalg::clear_denominators(r));
    linalg::integer_echelon(rows, columns.size());
    for (const auto& r : rows) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < columns.size(); ++c)
        if (sgn(r[c]) != 0) terms.push_back({columns[c], Rational(r[c])});
      gens.emplace_back(n, std::move(terms));
    }
  }
  return IdealPresentation(ideal.ring(), std::move(gens));
}

IdealPresentation truncation_ideal(const IdealPresentation& ideal, unsigned k) {
  // Elements of degree j <= k are combinations of generators of degree <= j.
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators())
    if (*g.homogeneous_degree() <= k) gens.push_back(g);
  return IdealPresentation(ideal.ring(), std::move(gens));
}

Regularity regularity_via_gin(const IdealPresentation& ideal, const GinConfig& config) {
  if (ideal.is_zero()) throw std::invalid_argument("regularity of the zero ideal");
  const unsigned r = gin(ideal, TermOrder::RevLex, config).gin.max_generator_degree();
  return {r, static_cast<int>(r) - 1};
}

bool is_componentwise_linear(const IdealPresentation& ideal, const GinConfig& config) {
  if (ideal.is_zero()) return true;
  if (ideal.min_degree() == 0) throw std::invalid_argument("componentwise linearity needs a proper ideal");
  const unsigned top = regularity_via_gin(ideal, config).ideal;
  for (unsigned k = ideal.min_degree(); k <= top; ++k) {
    const IdealPresentation t = truncation_ideal(ideal, k);
    if (regularity_via_gin(t, config).quotient > static_cast<int>(k) - 1) return false;
  }
  return true;
}

}  // namespace ginshift
