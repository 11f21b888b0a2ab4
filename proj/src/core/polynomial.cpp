#include "ginshift/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "ginshift/errors.hpp"

namespace ginshift {

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw ContextMismatch("polynomials from rings with " + std::to_string(a.nvars()) + " and " +
                          std::to_string(b.nvars()) + " variables");
}

void check_same_order(const Polynomial& a, const Polynomial& b) {
  if (a.order() != b.order()) throw std::invalid_argument("polynomials carry different term orders");
}

// Builds a normalized term list from an accumulator.
std::vector<Term> collect(std::unordered_map<Monomial, Rational>& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back({m, std::move(c)});
  return terms;
}

std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, TermOrder order, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering cmp = std::strong_ordering::less;
    if (i == a.size()) cmp = std::strong_ordering::less;
    else if (j == b.size()) cmp = std::strong_ordering::greater;
    else cmp = compare(order, a[i].monomial, b[j].monomial);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({b[j].monomial, subtract ? Rational(-b[j].coefficient) : b[j].coefficient});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (sgn(c) != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms, TermOrder order)
    : nvars_(nvars), order_(order), terms_(std::move(terms)) {
  for (const Term& t : terms_)
    if (t.monomial.nvars() != nvars_) throw ContextMismatch("term from a different ring");
  normalize();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c, TermOrder order) {
  return Polynomial(nvars, {{Monomial(nvars), c}}, order);
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c, TermOrder order) {
  return Polynomial(m.nvars(), {{m, c}}, order);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, TermOrder order) {
  return from_monomial(Monomial::variable(nvars, index), 1, order);
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [this](const Term& a, const Term& b) { return DescendingIn{order_}(a.monomial, b.monomial); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && sgn(merged.back().coefficient) == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && sgn(merged.back().coefficient) == 0) merged.pop_back();
  terms_ = std::move(merged);
  refresh_degree();
}

void Polynomial::refresh_degree() noexcept {
  homogeneous_degree_.reset();
  if (terms_.empty()) return;
  const unsigned d = terms_.front().monomial.degree();
  for (const Term& t : terms_)
    if (t.monomial.degree() != d) return;
  homogeneous_degree_ = d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

unsigned Polynomial::max_degree() const noexcept {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return 0;
}

Polynomial Polynomial::with_order(TermOrder order) const {
  if (order == order_) return *this;
  return Polynomial(nvars_, terms_, order);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coefficient *= inv;
  return out;
}

Polynomial Polynomial::homogeneous_component(unsigned d) const {
  Polynomial out(nvars_, order_);
  for (const Term& t : terms_)
    if (t.monomial.degree() == d) out.terms_.push_back(t);
  out.refresh_degree();
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(*this, other);
  check_same_order(*this, other);
  terms_ = merge(terms_, other.terms_, order_, false);
  refresh_degree();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(*this, other);
  check_same_order(*this, other);
  terms_ = merge(terms_, other.terms_, order_, true);
  refresh_degree();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  check_same_order(a, b);
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(a.size() * b.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
  return Polynomial(a.nvars_, collect(acc), a.order_);
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (sgn(c) == 0) return Polynomial(p.nvars_, p.order_);
  Polynomial out = p;
  for (Term& t : out.terms_) t.coefficient *= c;
  return out;
}

Polynomial operator*(const Monomial& m, const Polynomial& p) {
  if (m.nvars() != p.nvars_) throw ContextMismatch("monomial from a different ring");
  Polynomial out = p;
  // Multiplication by a monomial preserves the order of terms.
  for (Term& t : out.terms_) t.monomial *= m;
  out.refresh_degree();
  return out;
}

Polynomial power(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(p.nvars(), 1, p.order());
  Polynomial base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial contract(const Polynomial& g, const Polynomial& l) {
  check_same_ring(g, l);
  std::unordered_map<Monomial, Rational> acc;
  for (const Term& s : g.terms())
    for (const Term& t : l.terms())
      if (divides(s.monomial, t.monomial)) acc[quotient(t.monomial, s.monomial)] += s.coefficient * t.coefficient;
  return Polynomial(l.nvars(), collect(acc), l.order());
}

Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& m) {
  const std::size_t n = p.nvars();
  if (!m.is_square()) throw std::invalid_argument("substitution matrix must be square");
  if (m.rows() != n)
    throw std::invalid_argument("substitution matrix has size " + std::to_string(m.rows()) + " for " +
                                std::to_string(n) + " variables");
  // images[i] = Σ_j M(j, i) x_j; powers[i][e] = images[i]^e, built on demand.
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(m(j, i)) != 0) terms.push_back({Monomial::variable(n, j), m(j, i)});
    images.emplace_back(n, std::move(terms), p.order());
  }
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(n, 1, p.order()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  std::unordered_map<Monomial, Rational> acc;
  for (const Term& t : p.terms()) {
    Polynomial prod = Polynomial::constant(n, t.coefficient, p.order());
    for (std::size_t i = 0; i < n; ++i)
      if (t.monomial[i] != 0) prod = prod * power_of(i, t.monomial[i]);
    for (const Term& s : prod.terms()) acc[s.monomial] += s.coefficient;
  }
  return Polynomial(n, collect(acc), p.order());
}

Polynomial embed(const Polynomial& p, std::size_t offset, std::size_t target_nvars) {
  if (p.nvars() + offset > target_nvars)
    throw std::out_of_range("embedding " + std::to_string(p.nvars()) + " variables at offset " +
                            std::to_string(offset) + " overflows a ring with " + std::to_string(target_nvars) +
                            " variables");
  std::vector<Term> terms;
  terms.reserve(p.size());
  std::vector<int> exps(target_nvars, 0);
  for (const Term& t : p.terms()) {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t i = 0; i < p.nvars(); ++i) exps[i + offset] = static_cast<int>(t.monomial[i]);
    terms.push_back({Monomial::from_exponents(exps), t.coefficient});
  }
  return Polynomial(target_nvars, std::move(terms), p.order());
}

std::uint64_t support(const Polynomial& p) noexcept {
  std::uint64_t mask = 0;
  for (const Term& t : p.terms()) mask |= t.monomial.support();
  return mask;
}

}  // namespace ginshift
