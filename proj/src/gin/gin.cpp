#include "ginshift/gin.hpp"

#include <algorithm>
#include <unordered_map>

#include "ginshift/errors.hpp"
#include "ginshift/linalg.hpp"
#include "ginshift/random.hpp"

namespace ginshift {

namespace {

using Rows = std::vector<std::vector<Rational>>;

IdealPresentation transformed(const IdealPresentation& ideal, const GenericChange& change) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Polynomial& g : ideal.generators()) gens.push_back(change.apply_inverse_scaled(g));
  return IdealPresentation(ideal.ring(), std::move(gens));
}

}  // namespace

GenericChange::GenericChange(RationalMatrix a, std::uint64_t seed, std::uint64_t bound)
    : a_(std::move(a)), seed_(seed), bound_(bound) {
  if (!a_.is_square() || a_.rows() == 0) throw std::invalid_argument("generic change needs a nonempty square matrix");
  det_ = linalg::determinant(a_);
  if (sgn(det_) == 0) throw std::invalid_argument("generic change matrix is singular");
  adjugate_ = linalg::inverse(a_);
  for (std::size_t i = 0; i < adjugate_.rows(); ++i)
    for (std::size_t j = 0; j < adjugate_.cols(); ++j) adjugate_(i, j) *= det_;
  const std::size_t n = a_.rows();
  for (std::size_t j = 0; j < n; ++j) forms_.push_back(substitute_linear(Polynomial::variable(n, j), a_));
}

Polynomial GenericChange::power(const Monomial& b) const {
  Polynomial out = Polynomial::constant(nvars(), 1);
  for (std::size_t j = 0; j < nvars(); ++j)
    if (b[j] > 0) out = out * ginshift::power(forms_[j], b[j]);
  return out;
}

Polynomial GenericChange::apply(const Polynomial& p) const { return substitute_linear(p, a_); }

Polynomial GenericChange::apply_inverse_scaled(const Polynomial& p) const { return substitute_linear(p, adjugate_); }

GenericChange random_change(std::size_t nvars, std::uint64_t seed, std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("entry bound must be positive");
  if (bound > static_cast<std::uint64_t>(INT64_MAX / 2)) throw std::invalid_argument("entry bound too large");
  Rng rng(seed);
  const auto b = static_cast<std::int64_t>(bound);
  for (;;) {
    RationalMatrix a(nvars, nvars);
    for (std::size_t i = 0; i < nvars; ++i)
      for (std::size_t j = 0; j < nvars; ++j) a(i, j) = Rational(static_cast<long>(rng.uniform(-b, b)));
    if (sgn(linalg::determinant(a)) != 0) return GenericChange(std::move(a), seed, bound);
  }
}

MonomialIdeal initial_after_change(const IdealPresentation& ideal, TermOrder order, const GenericChange& change) {
  if (change.nvars() != ideal.nvars()) throw ContextMismatch("generic change of the wrong size");
  if (ideal.is_zero()) return MonomialIdeal(ideal.nvars());
  return initial_ideal(buchberger(transformed(ideal, change), order));
}

std::uint64_t trial_seed(std::uint64_t seed, unsigned attempt, unsigned trial) {
  return derive_seed(seed, {attempt, trial});
}

GinResult gin(const IdealPresentation& ideal, TermOrder order, const GinConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("gin needs at least one trial");
  const std::size_t n = ideal.nvars();
  std::uint64_t bound = config.bound;
  std::string last_problem;
  for (unsigned attempt = 0; attempt <= config.max_retries; ++attempt, bound *= 10) {
    GinResult result;
    result.order = order;
    std::optional<MonomialIdeal> common;
    bool agree = true;
    for (unsigned t = 0; t < config.trials; ++t) {
      const std::uint64_t s = trial_seed(config.seed, attempt, t);
      GenericChange change = random_change(n, s, bound);
      std::optional<MonomialIdeal> found;
      bool modular = false;
      if (config.modp && common && !ideal.is_zero()) {
        try {
          ModpBasis mb = modp_accelerator(transformed(ideal, change), order, *config.modp);
          MonomialIdeal candidate(n, mb.leading_monomials());
          if (candidate == *common) {
            found = std::move(candidate);
            modular = true;
          } else {
            ++result.unlucky_primes;
          }
        } catch (const UnluckyPrime&) {
          ++result.unlucky_primes;
        }
      }
      if (!found) found = initial_after_change(ideal, order, change);
      result.trials.push_back({s, bound, found->fingerprint(), modular});
      if (!common) {
        common = std::move(*found);
      } else if (*found != *common) {
        agree = false;
      }
    }
    if (!agree) {
      last_problem = "generic initial ideal trials disagree";
      continue;
    }
    if (!is_strongly_stable(*common)) {
      last_problem = "generic initial ideal candidate is not strongly stable";
      continue;
    }
    result.gin = std::move(*common);
    result.certified = true;
    return result;
  }
  throw GinUncertain(config.seed, last_problem);
}

GinResult gin(const MonomialIdeal& ideal, TermOrder order, const GinConfig& config) {
  return gin(IdealPresentation(ideal), order, config);
}

std::vector<Monomial> gin_slice(const IdealPresentation& ideal, TermOrder order, const GenericChange& change,
                                unsigned d) {
  if (ideal.is_zero()) return {};
  return macaulay_initial(transformed(ideal, change), order, d);
}

std::size_t d_value(const MonomialIdeal& g, const Monomial& a) {
  if (a.degree() == 0) throw std::invalid_argument("d-value of the unit monomial");
  const Monomial reduced = a.divided_by_variable(min_index(a) - 1);
  std::size_t count = 0;
  for (const Monomial& b : shadow(reduced))
    if (!g.contains(b)) ++count;
  return count;
}

std::size_t d_of(const IdealPresentation& ideal, const Monomial& a, const GinConfig& config) {
  return d_value(gin(ideal, TermOrder::RevLex, config).gin, a);
}

bool not_in_gin_by_d(const MonomialIdeal& g, const Monomial& a) {
  if (a.degree() == 0) throw std::invalid_argument("d-value of the unit monomial");
  const Monomial reduced = a.divided_by_variable(min_index(a) - 1);
  const std::size_t lhs = min_index(reduced) + 1 - min_index(a);
  return lhs <= d_value(g, a);
}

bool not_in_gin_by_d(const IdealPresentation& ideal, const Monomial& a, const GinConfig& config) {
  return not_in_gin_by_d(gin(ideal, TermOrder::RevLex, config).gin, a);
}

bool same_span(const Rows& a, const Rows& b, std::size_t cols) {
  const std::size_t ra = linalg::rank(a, cols);
  if (ra != linalg::rank(b, cols)) return false;
  Rows both = a;
  both.insert(both.end(), b.begin(), b.end());
  return linalg::rank(both, cols) == ra;
}

struct SpanOracle::Impl {
  IdealPresentation ideal;
  GenericChange change;
  KernelSpace space;
  Reducer reducer;
  MonomialIdeal ini;
  std::unordered_map<Monomial, Polynomial> powers;
  std::unordered_map<Monomial, std::vector<Rational>> residues;
  std::map<unsigned, Rows> spaces;
  std::map<unsigned, std::unordered_map<Monomial, std::size_t>> indices;

  Impl(const IdealPresentation& i, GenericChange c, KernelSpace s, const GroebnerBasis& gb)
      : ideal(i), change(std::move(c)), space(s), reducer(gb), ini(initial_ideal(gb)) {}

  const Polynomial& power(const Monomial& b) {
    auto it = powers.find(b);
    if (it == powers.end()) it = powers.emplace(b, change.power(b)).first;
    return it->second;
  }

  const std::unordered_map<Monomial, std::size_t>& index(unsigned e) {
    auto it = indices.find(e);
    if (it != indices.end()) return it->second;
    std::unordered_map<Monomial, std::size_t> idx;
    const auto mons = monomials_of_degree(ideal.nvars(), e, TermOrder::RevLex);
    for (std::size_t k = 0; k < mons.size(); ++k) idx.emplace(mons[k], k);
    return indices.emplace(e, std::move(idx)).first->second;
  }

  const std::vector<Rational>& residue(const Monomial& b) {
    auto it = residues.find(b);
    if (it != residues.end()) return it->second;
    const std::vector<Monomial> basis = ini.standard_monomials(b.degree());
    const Polynomial nf = reducer.normal_form(power(b));
    std::vector<Rational> row(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) row[k] = nf.coefficient(basis[k]);
    return residues.emplace(b, std::move(row)).first->second;
  }

  const Rows& quotient_space(unsigned e) {
    auto it = spaces.find(e);
    if (it != spaces.end()) return it->second;
    const auto& idx = index(e);
    Rows basis;
    if (space == KernelSpace::StandardMonomials) {
      for (const Monomial& c : ini.standard_monomials(e)) {
        std::vector<Rational> v(idx.size());
        v[idx.at(c)] = 1;
        basis.push_back(std::move(v));
      }
    } else if (ideal.is_zero()) {
      for (std::size_t k = 0; k < idx.size(); ++k) {
        std::vector<Rational> v(idx.size());
        v[k] = 1;
        basis.push_back(std::move(v));
      }
    } else {
      basis = linalg::nullspace(macaulay_matrix(ideal, TermOrder::RevLex, e), idx.size());
    }
    return spaces.emplace(e, std::move(basis)).first->second;
  }

  // ⋂_{b ∈ forms} Kern(τ_{f^b}) restricted to the degree-e quotient space.
  Rows kernel(const std::vector<Monomial>& forms, unsigned e) {
    const Rows& v = quotient_space(e);
    const auto& idx = index(e);
    Rows conditions;
    for (const Monomial& b : forms) {
      if (b.degree() > e) throw std::invalid_argument("kernel degree below the contraction degree");
      const Polynomial& fb = power(b);
      for (const Monomial& u : monomials_of_degree(ideal.nvars(), e - b.degree(), TermOrder::RevLex)) {
        // Functional g ↦ coefficient of x^u in τ_{f^b}(g), evaluated on the basis of v.
        std::vector<Rational> row(v.size());
        for (const Term& t : fb.terms()) {
          const std::size_t c = idx.at(t.monomial * u);
          for (std::size_t k = 0; k < v.size(); ++k)
            if (sgn(v[k][c]) != 0) row[k] += t.coefficient * v[k][c];
        }
        conditions.push_back(std::move(row));
      }
    }
    Rows lambdas = linalg::nullspace(conditions, v.size());
    Rows out;
    for (const auto& l : lambdas) {
      std::vector<Rational> g(idx.size());
      for (std::size_t k = 0; k < v.size(); ++k)
        if (sgn(l[k]) != 0)
          for (std::size_t c = 0; c < idx.size(); ++c) g[c] += l[k] * v[k][c];
      out.push_back(std::move(g));
    }
    return out;
  }

  std::vector<Monomial> admissible(const Monomial& a, bool strict) const {
    std::vector<Monomial> out;
    for (const Monomial& b : monomials_of_degree(ideal.nvars(), a.degree(), TermOrder::RevLex)) {
      const auto c = compare(TermOrder::RevLex, b, a);
      if (c == std::strong_ordering::less || (!strict && c == std::strong_ordering::equal)) out.push_back(b);
    }
    return out;
  }
};

SpanOracle::SpanOracle(const IdealPresentation& ideal, GenericChange change, KernelSpace space) {
  if (change.nvars() != ideal.nvars()) throw ContextMismatch("generic change of the wrong size");
  impl_ = std::make_unique<Impl>(ideal, std::move(change), space, buchberger(ideal, TermOrder::RevLex));
}
SpanOracle::~SpanOracle() = default;
SpanOracle::SpanOracle(SpanOracle&&) noexcept = default;
SpanOracle& SpanOracle::operator=(SpanOracle&&) noexcept = default;

const GenericChange& SpanOracle::change() const { return impl_->change; }
KernelSpace SpanOracle::space() const { return impl_->space; }

bool SpanOracle::gin_membership_span(const Monomial& a) {
  if (a.degree() == 0) throw std::invalid_argument("span criterion needs a monomial of positive degree");
  Rows smaller;
  for (const Monomial& b : impl_->admissible(a, true)) smaller.push_back(impl_->residue(b));
  const auto& target = impl_->residue(a);
  return linalg::in_row_span(target, smaller, target.size());
}

Rows SpanOracle::kernel_intersection(const Monomial& a, unsigned e, bool strict) {
  if (e < a.degree()) throw std::invalid_argument("kernel degree below |a|");
  return impl_->kernel(impl_->admissible(a, strict), e);
}

std::size_t SpanOracle::kernel_intersection_dim(const Monomial& a, unsigned e, bool strict) {
  return kernel_intersection(a, e, strict).size();
}

Rows SpanOracle::kernel_of(const Monomial& a, unsigned e) { return impl_->kernel({a}, e); }

Rows SpanOracle::kernel_of_shifts(const Monomial& a, unsigned e) {
  std::vector<Monomial> forms;
  for (std::size_t j = 0; j < a.nvars(); ++j) forms.push_back(a.times_variable(j));
  return impl_->kernel(forms, e);
}

const Rows& SpanOracle::quotient_space(unsigned e) { return impl_->quotient_space(e); }

}  // namespace ginshift
