#include "ginshift/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "ginshift/errors.hpp"

namespace ginshift {

namespace {

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return compare(TermOrder::RevLex, a, b) == std::strong_ordering::greater;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const Monomial& g : generators)
    if (g.nvars() != nvars) throw ContextMismatch("generator from a ring with " + std::to_string(g.nvars()) + " variables");
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Sorted by degree, so only earlier generators can divide later ones.
  for (const Monomial& g : generators) {
    bool redundant = false;
    for (const Monomial& h : gens_)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
}

MonomialIdeal MonomialIdeal::maximal(std::size_t nvars) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Monomial::variable(nvars, i));
  return MonomialIdeal(nvars, std::move(gens));
}

unsigned MonomialIdeal::max_generator_degree() const noexcept {
  return gens_.empty() ? 0 : gens_.back().degree();
}

unsigned MonomialIdeal::min_generator_degree() const noexcept {
  return gens_.empty() ? 0 : gens_.front().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars_) throw ContextMismatch("monomial from a different ring");
  for (const Monomial& g : gens_) {
    if (g.degree() > m.degree()) break;
    if (divides(g, m)) return true;
  }
  return false;
}

std::vector<Monomial> MonomialIdeal::slice(unsigned d, TermOrder order) const {
  std::vector<Monomial> out;
  for (Monomial& m : monomials_of_degree(nvars_, d, order))
    if (contains(m)) out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> MonomialIdeal::standard_monomials(unsigned d, TermOrder order) const {
  std::vector<Monomial> out;
  for (Monomial& m : monomials_of_degree(nvars_, d, order))
    if (!contains(m)) out.push_back(std::move(m));
  return out;
}

MonomialIdeal MonomialIdeal::truncated(unsigned k) const {
  std::vector<Monomial> gens;
  for (const Monomial& g : gens_)
    if (g.degree() <= k) gens.push_back(g);
  return MonomialIdeal(nvars_, std::move(gens));
}

std::uint64_t MonomialIdeal::fingerprint() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ nvars_;
  for (const Monomial& g : gens_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      h ^= g[i] + 1u;
      h *= 1099511628211ull;
    }
    h ^= 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw ContextMismatch("sum of monomial ideals from different rings");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw ContextMismatch("product of monomial ideals from different rings");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) gens.push_back(x * y);
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned k) {
  MonomialIdeal result(a.nvars(), {Monomial(a.nvars())});
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

MonomialIdeal embed(const MonomialIdeal& m, std::size_t offset, std::size_t target_nvars) {
  if (m.nvars() + offset > target_nvars) throw std::out_of_range("monomial ideal embedding overflows target ring");
  std::vector<Monomial> gens;
  std::vector<int> exps(target_nvars);
  for (const Monomial& g : m.generators()) {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t i = 0; i < m.nvars(); ++i) exps[i + offset] = static_cast<int>(g[i]);
    gens.push_back(Monomial::from_exponents(exps));
  }
  return MonomialIdeal(target_nvars, std::move(gens));
}

bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  for (const Monomial& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

bool is_strongly_stable(const MonomialIdeal& m) {
  for (const Monomial& g : m.generators())
    for (std::size_t i = 1; i < m.nvars(); ++i) {
      if (g[i] == 0) continue;
      const Monomial reduced = g.divided_by_variable(i);
      for (std::size_t j = 0; j < i; ++j)
        if (!m.contains(reduced.times_variable(j))) return false;
    }
  return true;
}

bool is_squarefree_strongly_stable(const MonomialIdeal& m) {
  for (const Monomial& g : m.generators())
    if (!g.is_squarefree()) throw std::invalid_argument("non-squarefree generator " + to_string(g));
  for (const Monomial& g : m.generators())
    for (std::size_t i = 1; i < m.nvars(); ++i) {
      if (g[i] == 0) continue;
      const Monomial reduced = g.divided_by_variable(i);
      for (std::size_t j = 0; j < i; ++j)
        if (g[j] == 0 && !m.contains(reduced.times_variable(j))) return false;
    }
  return true;
}

std::string to_string(const MonomialIdeal& m) {
  if (m.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < m.generators().size(); ++i) {
    if (i) s += ", ";
    s += to_string(m.generators()[i]);
  }
  return s + ")";
}

}  // namespace ginshift
