#include "ginshift/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "engine.hpp"
#include "ginshift/errors.hpp"
#include "ginshift/linalg.hpp"
#include "ginshift/poly_io.hpp"

namespace ginshift {

using detail::Engine;
using detail::PrimeField;
using detail::RationalField;

IdealPresentation::IdealPresentation(RingContext ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  generators_.reserve(generators.size());
  for (Polynomial& g : generators) {
    if (g.nvars() != ring_.nvars())
      throw ContextMismatch("generator in " + std::to_string(g.nvars()) + " variables for a ring with " +
                            std::to_string(ring_.nvars()));
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    if (!g.is_homogeneous()) throw InhomogeneousError("inhomogeneous generator: " + to_string(g));
    generators_.push_back(g.with_order(TermOrder::RevLex));
  }
}

IdealPresentation::IdealPresentation(const MonomialIdeal& m) : ring_(m.nvars()) {
  for (const Monomial& g : m.generators()) generators_.push_back(Polynomial::from_monomial(g));
}

bool IdealPresentation::is_monomial() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.size() == 1; });
}

unsigned IdealPresentation::max_degree() const noexcept {
  unsigned d = 0;
  for (const Polynomial& g : generators_) d = std::max(d, *g.homogeneous_degree());
  return d;
}

unsigned IdealPresentation::min_degree() const noexcept {
  if (generators_.empty()) return 0;
  unsigned d = *generators_.front().homogeneous_degree();
  for (const Polynomial& g : generators_) d = std::min(d, *g.homogeneous_degree());
  return d;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const Polynomial& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

namespace {

Polynomial to_polynomial(std::size_t nvars, TermOrder order, const Engine<RationalField>::Poly& p) {
  std::vector<Term> terms;
  terms.reserve(p.monomials.size());
  for (std::size_t t = 0; t < p.monomials.size(); ++t) terms.push_back({p.monomials[t], p.coefficients[t]});
  return Polynomial(nvars, std::move(terms), order);
}

void check_homogeneous_input(const IdealPresentation& ideal) {
  // IdealPresentation enforces this; guard against future relaxations.
  for (const Polynomial& g : ideal.generators())
    if (!g.is_homogeneous()) throw InhomogeneousError("Buchberger requires homogeneous generators");
}

}  // namespace

struct Reducer::Impl {
  std::size_t nvars;
  TermOrder order;
  Engine<RationalField> engine;

  explicit Impl(const GroebnerBasis& basis)
      : nvars(basis.nvars()), order(basis.order()), engine(basis.nvars(), basis.order(), RationalField{}) {
    std::vector<Engine<RationalField>::Poly> polys;
    for (const Polynomial& g : basis.elements()) polys.push_back(engine.from_polynomial(g));
    engine.install_basis(polys);
  }
};

Reducer::Reducer(const GroebnerBasis& basis) : impl_(std::make_unique<Impl>(basis)) {}
Reducer::~Reducer() = default;
Reducer::Reducer(Reducer&&) noexcept = default;
Reducer& Reducer::operator=(Reducer&&) noexcept = default;

Polynomial Reducer::normal_form(const Polynomial& f) {
  if (f.nvars() != impl_->nvars) throw ContextMismatch("normal form: polynomial from a different ring");
  Polynomial result(impl_->nvars, f.order());
  if (f.is_zero()) return result;
  std::vector<unsigned> degrees;
  for (const Term& t : f.terms()) degrees.push_back(t.monomial.degree());
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (unsigned d : degrees) {
    auto component = impl_->engine.from_polynomial(f.homogeneous_component(d));
    auto reduced = impl_->engine.reduce(component);
    result += to_polynomial(impl_->nvars, impl_->order, reduced).with_order(f.order());
  }
  return result;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  Reducer r(basis);
  return r.normal_form(f);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.order() != g.order()) throw std::invalid_argument("S-polynomial of polynomials with different orders");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = quotient(l, f.leading_monomial()) * f.monic();
  Polynomial b = quotient(l, g.leading_monomial()) * g.monic();
  return a - b;
}

GroebnerBasis buchberger(const IdealPresentation& ideal, TermOrder order) {
  check_homogeneous_input(ideal);
  const std::size_t n = ideal.nvars();
  Engine<RationalField> engine(n, order, RationalField{});
  std::vector<Engine<RationalField>::Poly> inputs;
  for (const Polynomial& g : ideal.generators()) inputs.push_back(engine.from_polynomial(g));
  engine.run(std::move(inputs));
  std::vector<Polynomial> elements;
  for (const auto& p : engine.reduced_basis()) elements.push_back(to_polynomial(n, order, p));
  return GroebnerBasis(n, order, std::move(elements));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  Reducer r(basis);
  const auto& g = basis.elements();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!r.normal_form(s_polynomial(g[i], g[j])).is_zero()) return false;
  return true;
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  return MonomialIdeal(basis.nvars(), basis.leading_monomials());
}

MonomialIdeal initial_ideal(const IdealPresentation& ideal, TermOrder order) {
  if (ideal.is_monomial()) {
    std::vector<Monomial> gens;
    for (const Polynomial& g : ideal.generators()) gens.push_back(g.leading_monomial());
    return MonomialIdeal(ideal.nvars(), std::move(gens));
  }
  return initial_ideal(buchberger(ideal, order));
}

std::vector<Monomial> quotient_basis(const IdealPresentation& ideal, unsigned d, TermOrder order) {
  return initial_ideal(ideal, order).standard_monomials(d, order);
}

std::size_t hilbert_dim(const IdealPresentation& ideal, unsigned d) {
  return quotient_basis(ideal, d).size();
}

std::size_t hilbert_dim(const MonomialIdeal& ideal, unsigned d) { return ideal.standard_monomials(d).size(); }

std::vector<std::vector<Rational>> macaulay_matrix(const IdealPresentation& ideal, TermOrder order, unsigned d) {
  const std::size_t n = ideal.nvars();
  detail::DegreeTable columns(n, d, order);
  std::vector<std::vector<Rational>> rows;
  for (const Polynomial& g : ideal.generators()) {
    const unsigned gd = *g.homogeneous_degree();
    if (gd > d) continue;
    for (const Monomial& m : monomials_of_degree(n, d - gd, order)) {
      std::vector<Rational> row(columns.size());
      for (const Term& t : g.terms()) row[columns.index(m * t.monomial)] = t.coefficient;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<Monomial> macaulay_initial(const IdealPresentation& ideal, TermOrder order, unsigned d) {
  const std::vector<Monomial> columns = monomials_of_degree(ideal.nvars(), d, order);
  const auto rows = macaulay_matrix(ideal, order, d);
  std::vector<Monomial> out;
  for (std::size_t c : linalg::pivot_columns(rows, columns.size())) out.push_back(columns[c]);
  return out;
}

unsigned default_macaulay_cutoff(const IdealPresentation& ideal) { return 2 * ideal.max_degree() + 2; }

std::vector<Monomial> ModpBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& e : elements) out.push_back(e.front().first);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<detail::uint128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ModpBasis modp_accelerator(const IdealPresentation& ideal, TermOrder order, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modular accelerator needs a prime, got " + std::to_string(p));
  if (p >= (1ull << 62)) throw std::invalid_argument("prime too large for 64-bit modular arithmetic");
  check_homogeneous_input(ideal);
  const std::size_t n = ideal.nvars();
  Engine<PrimeField> engine(n, order, PrimeField{p});
  std::vector<Engine<PrimeField>::Poly> inputs;
  for (const Polynomial& g : ideal.generators()) {
    auto poly = engine.from_polynomial(g);
    if (!poly.empty()) inputs.push_back(std::move(poly));
  }
  engine.run(std::move(inputs));
  ModpBasis out{n, order, p, {}};
  for (const auto& e : engine.reduced_basis()) {
    std::vector<std::pair<Monomial, std::uint64_t>> terms;
    for (std::size_t t = 0; t < e.monomials.size(); ++t) terms.emplace_back(e.monomials[t], e.coefficients[t]);
    out.elements.push_back(std::move(terms));
  }
  return out;
}

bool is_unlucky(const ModpBasis& modp, const GroebnerBasis& exact) {
  if (modp.nvars != exact.nvars() || modp.order != exact.order()) throw std::invalid_argument("incomparable bases");
  return MonomialIdeal(modp.nvars, modp.leading_monomials()) != initial_ideal(exact);
}

}  // namespace ginshift
