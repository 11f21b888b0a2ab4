#pragma once

// Buchberger engine shared by the exact (Q) and prime-field paths.
// Homogeneous input only: every polynomial is reduced in a dense vector
// indexed by the monomials of its degree.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ginshift/groebner.hpp"
#include "ginshift/monomial.hpp"
#include "ginshift/rational.hpp"

namespace ginshift::detail {

__extension__ typedef unsigned __int128 uint128;

struct RationalField {
  using Value = Rational;
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static Value from_rational(const Rational& q) { return q; }
  static Rational to_rational(const Value& v) { return v; }
  static void add_to(Value& acc, const Value& c) { acc += c; }
  static void sub_from(Value& acc, const Value& c) { acc -= c; }
  static void sub_mul(Value& acc, const Value& a, const Value& b) { acc -= a * b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value inv(const Value& v) { return 1 / v; }
  static void clear(Value& v) { v = 0; }
};

struct PrimeField {
  using Value = std::uint64_t;
  std::uint64_t p;

  bool is_zero(Value v) const { return v == 0; }
  Value reduce_integer(const Integer& z) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
  }
  Value from_rational(const Rational& q) const {
    Value den = reduce_integer(q.get_den());
    if (den == 0) throw UnluckyPrime("prime " + std::to_string(p) + " divides a coefficient denominator");
    return mul(reduce_integer(q.get_num()), inv(den));
  }
  void add_to(Value& acc, Value c) const { acc = (acc + c) % p; }
  void sub_from(Value& acc, Value c) const { acc = (acc + p - c) % p; }
  void sub_mul(Value& acc, Value a, Value b) const { sub_from(acc, mul(a, b)); }
  Value mul(Value a, Value b) const {
    return static_cast<Value>((static_cast<uint128>(a) * b) % p);
  }
  Value inv(Value v) const {
    // Fermat: v^(p-2).
    Value result = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  static void clear(Value& v) { v = 0; }
};

/// Monomials of one degree, descending in the term order, with an index map.
class DegreeTable {
 public:
  DegreeTable(std::size_t nvars, unsigned degree, TermOrder order)
      : monomials_(monomials_of_degree(nvars, degree, order)) {
    index_.reserve(monomials_.size() * 2);
    for (std::uint32_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  std::uint32_t index(const Monomial& m) const { return index_.at(m); }

 private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::uint32_t> index_;
};

template <class F>
class Engine {
 public:
  using Value = typename F::Value;

  /// Homogeneous polynomial, terms descending; monic once inside the basis.
  struct Poly {
    std::vector<Monomial> monomials;
    std::vector<Value> coefficients;
    bool empty() const { return monomials.empty(); }
    const Monomial& lead() const { return monomials.front(); }
    unsigned degree() const { return monomials.front().degree(); }
  };

  Engine(std::size_t nvars, TermOrder order, F field) : nvars_(nvars), order_(order), field_(field) {}

  Poly from_polynomial(const Polynomial& p) const {
    Polynomial q = p.with_order(order_);
    Poly out;
    for (const Term& t : q.terms()) {
      Value v = field_.from_rational(t.coefficient);
      if (field_.is_zero(v)) continue;
      out.monomials.push_back(t.monomial);
      out.coefficients.push_back(std::move(v));
    }
    return out;
  }

  /// Installs an already-valid basis (no pair processing), e.g. for normal forms.
  void install_basis(const std::vector<Poly>& basis) {
    for (const Poly& p : basis) add_element(make_monic(p), /*update_pairs=*/false);
  }

  /// Runs Buchberger on the given homogeneous generators.
  void run(std::vector<Poly> inputs) {
    std::stable_sort(inputs.begin(), inputs.end(),
                     [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
    std::size_t next_input = 0;
    while (next_input < inputs.size() || !pairs_.empty()) {
      const unsigned input_degree =
          next_input < inputs.size() ? inputs[next_input].degree() : std::numeric_limits<unsigned>::max();
      const std::size_t best = best_pair();
      const unsigned pair_degree = best < pairs_.size() ? pairs_[best].lcm.degree() : std::numeric_limits<unsigned>::max();
      Poly h;
      if (input_degree <= pair_degree) {
        h = reduce(inputs[next_input++]);
      } else {
        Pair pr = pairs_[best];
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        h = reduce_s_polynomial(pr);
      }
      if (!h.empty()) add_element(make_monic(h), /*update_pairs=*/true);
    }
  }

  /// Reduced, monic basis sorted by leading monomial ascending.
  std::vector<Poly> reduced_basis() {
    std::vector<std::size_t> ids = active_ids();
    std::vector<Poly> out;
    out.reserve(ids.size());
    for (std::size_t id : ids) {
      const Poly& g = polys_[id];
      Poly tail;
      tail.monomials.assign(g.monomials.begin() + 1, g.monomials.end());
      tail.coefficients.assign(g.coefficients.begin() + 1, g.coefficients.end());
      Poly reduced_tail = tail.empty() ? tail : reduce(tail);
      Poly r;
      r.monomials.push_back(g.lead());
      r.coefficients.push_back(g.coefficients.front());
      r.monomials.insert(r.monomials.end(), reduced_tail.monomials.begin(), reduced_tail.monomials.end());
      r.coefficients.insert(r.coefficients.end(), reduced_tail.coefficients.begin(), reduced_tail.coefficients.end());
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [this](const Poly& a, const Poly& b) {
      return compare(order_, a.lead(), b.lead()) == std::strong_ordering::less;
    });
    return out;
  }

  /// Full reduction of a homogeneous polynomial by the active basis.
  Poly reduce(const Poly& h) {
    if (h.empty()) return h;
    DegreeTable& table = table_for(h.degree());
    std::vector<Value>& v = scratch_for(h.degree());
    for (std::size_t t = 0; t < h.monomials.size(); ++t) field_.add_to(v[table.index(h.monomials[t])], h.coefficients[t]);
    return reduce_dense(table, v, table.index(h.lead()));
  }

  std::size_t basis_size() const { return active_ids().size(); }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  Poly make_monic(Poly p) const {
    Value inv = field_.inv(p.coefficients.front());
    for (Value& c : p.coefficients) c = field_.mul(c, inv);
    return p;
  }

  std::vector<std::size_t> active_ids() const {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) ids.push_back(i);
    return ids;
  }

  DegreeTable& table_for(unsigned d) {
    if (tables_.size() <= d) tables_.resize(d + 1);
    if (!tables_[d]) tables_[d] = std::make_unique<DegreeTable>(nvars_, d, order_);
    return *tables_[d];
  }

  std::vector<Value>& scratch_for(unsigned d) {
    if (scratch_.size() <= d) scratch_.resize(d + 1);
    if (scratch_[d].size() != table_for(d).size()) scratch_[d].assign(table_for(d).size(), Value{});
    return scratch_[d];
  }

  long find_reducer(const Monomial& u) const {
    const std::uint64_t us = u.support();
    for (std::size_t k = 0; k < lead_ids_.size(); ++k) {
      const std::size_t id = lead_ids_[k];
      if (!active_[id]) continue;
      if ((lead_support_[k] & ~us) != 0) continue;
      const Monomial& lm = polys_[id].lead();
      if (lm.degree() <= u.degree() && divides(lm, u)) return static_cast<long>(id);
    }
    return -1;
  }

  Poly reduce_dense(DegreeTable& table, std::vector<Value>& v, std::size_t start) {
    Poly out;
    for (std::size_t idx = start; idx < table.size(); ++idx) {
      if (field_.is_zero(v[idx])) continue;
      const long r = find_reducer(table[idx]);
      if (r < 0) {
        out.monomials.push_back(table[idx]);
        out.coefficients.push_back(std::move(v[idx]));
        F::clear(v[idx]);
        continue;
      }
      const Poly& g = polys_[static_cast<std::size_t>(r)];
      const Monomial q = quotient(table[idx], g.lead());
      const Value coef = v[idx];
      for (std::size_t t = 1; t < g.monomials.size(); ++t)
        field_.sub_mul(v[table.index(q * g.monomials[t])], coef, g.coefficients[t]);
      F::clear(v[idx]);
    }
    return out;
  }

  Poly reduce_s_polynomial(const Pair& pr) {
    const Poly& a = polys_[pr.i];
    const Poly& b = polys_[pr.j];
    DegreeTable& table = table_for(pr.lcm.degree());
    std::vector<Value>& v = scratch_for(pr.lcm.degree());
    const Monomial qa = quotient(pr.lcm, a.lead());
    const Monomial qb = quotient(pr.lcm, b.lead());
    for (std::size_t t = 1; t < a.monomials.size(); ++t) field_.add_to(v[table.index(qa * a.monomials[t])], a.coefficients[t]);
    for (std::size_t t = 1; t < b.monomials.size(); ++t) field_.sub_from(v[table.index(qb * b.monomials[t])], b.coefficients[t]);
    return reduce_dense(table, v, table.index(pr.lcm));
  }

  std::size_t best_pair() const {
    std::size_t best = pairs_.size();
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (best == pairs_.size()) {
        best = k;
        continue;
      }
      const Pair& p = pairs_[k];
      const Pair& q = pairs_[best];
      if (p.lcm.degree() != q.lcm.degree()) {
        if (p.lcm.degree() < q.lcm.degree()) best = k;
        continue;
      }
      auto c = compare(order_, p.lcm, q.lcm);
      if (c == std::strong_ordering::less || (c == std::strong_ordering::equal && std::tie(p.i, p.j) < std::tie(q.i, q.j)))
        best = k;
    }
    return best;
  }

  // Gebauer–Möller pair update for a new element `k`.
  void update_pairs(std::size_t k) {
    const Monomial& hk = polys_[k].lead();
    std::vector<Pair> candidates;
    for (std::size_t id : active_ids()) candidates.push_back({id, k, lcm(polys_[id].lead(), hk)});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = coprime(polys_[p.i].lead(), hk);
      if (!keep) {
        keep = true;
        for (std::size_t o = c + 1; o < candidates.size() && keep; ++o)
          if (divides(candidates[o].lcm, p.lcm)) keep = false;
        for (std::size_t o = 0; o < kept.size() && keep; ++o)
          if (divides(kept[o].lcm, p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      const bool divisible = divides(hk, p.lcm);
      if (!divisible || p.lcm == lcm(polys_[p.i].lead(), hk) || p.lcm == lcm(polys_[p.j].lead(), hk))
        next.push_back(p);
    }
    for (const Pair& p : kept)
      if (!coprime(polys_[p.i].lead(), hk)) next.push_back(p);
    pairs_ = std::move(next);

    for (std::size_t id : active_ids())
      if (divides(hk, polys_[id].lead())) active_[id] = false;
  }

  void add_element(Poly p, bool update) {
    const std::size_t k = polys_.size();
    polys_.push_back(std::move(p));
    active_.push_back(false);
    if (update) update_pairs(k);
    active_[k] = true;
    lead_ids_.push_back(k);
    lead_support_.push_back(polys_[k].lead().support());
  }

  std::size_t nvars_;
  TermOrder order_;
  F field_;
  std::vector<Poly> polys_;
  std::vector<bool> active_;
  std::vector<std::size_t> lead_ids_;
  std::vector<std::uint64_t> lead_support_;
  std::vector<Pair> pairs_;
  std::vector<std::unique_ptr<DegreeTable>> tables_;
  std::vector<std::vector<Value>> scratch_;
};

}  // namespace ginshift::detail
