#include "ginshift/monomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "ginshift/errors.hpp"

namespace ginshift {

namespace {

void check_nvars(std::size_t nvars) {
  if (nvars > Monomial::kMaxVars)
    throw std::length_error("at most " + std::to_string(Monomial::kMaxVars) + " variables supported, got " +
                            std::to_string(nvars));
}

void check_same_ring(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw ContextMismatch("monomials from rings with " + std::to_string(a.nvars()) + " and " +
                          std::to_string(b.nvars()) + " variables");
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace

RingContext::RingContext(std::size_t nvars) : names_(default_names(nvars)) {
  if (nvars == 0) throw std::invalid_argument("a ring needs at least one variable");
  check_nvars(nvars);
}

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  check_nvars(names_.size());
  std::unordered_set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("variable names must be distinct");
}

std::string to_string(TermOrder order) { return order == TermOrder::RevLex ? "rlex" : "lex"; }

Monomial::Monomial(std::size_t nvars) {
  check_nvars(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(from_exponents(std::span<const int>(exponents.begin(), exponents.size()))) {}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(exponents.size());
  unsigned degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw std::out_of_range("exponent out of range");
    m.exps_[i] = static_cast<Exponent>(exponents[i]);
    degree += static_cast<unsigned>(exponents[i]);
  }
  m.degree_ = static_cast<std::uint16_t>(degree);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = 1;
  m.degree_ = 1;
  return m;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + nvars_);
}

std::uint64_t Monomial::support() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  return mask;
}

bool Monomial::is_squarefree() const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > 1) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  check_same_ring(*this, other);
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > 255) throw std::overflow_error("exponent overflow");
    exps_[i] = static_cast<Exponent>(e);
  }
  degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return *this;
}

Monomial Monomial::times_variable(std::size_t index) const {
  if (index >= nvars_) throw std::out_of_range("variable index out of range");
  Monomial m = *this;
  if (m.exps_[index] == 255) throw std::overflow_error("exponent overflow");
  ++m.exps_[index];
  ++m.degree_;
  return m;
}

Monomial Monomial::divided_by_variable(std::size_t index) const {
  if (index >= nvars_ || exps_[index] == 0) throw std::domain_error("variable does not divide monomial");
  Monomial m = *this;
  --m.exps_[index];
  --m.degree_;
  return m;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the used exponent bytes.
  std::uint64_t h = 1469598103934665603ull ^ nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw std::domain_error("monomial quotient: " + to_string(a) + " does not divide " + to_string(b));
  Monomial q = b;
  for (std::size_t i = 0; i < b.nvars(); ++i) q.exps_[i] = static_cast<Monomial::Exponent>(b[i] - a[i]);
  q.degree_ = static_cast<std::uint16_t>(b.degree() - a.degree());
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  Monomial l = a;
  unsigned degree = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    l.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    degree += l.exps_[i];
  }
  l.degree_ = static_cast<std::uint16_t>(degree);
  return l;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  Monomial g = a;
  unsigned degree = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    g.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    degree += g.exps_[i];
  }
  g.degree_ = static_cast<std::uint16_t>(degree);
  return g;
}

bool coprime(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  return (a.support() & b.support()) == 0;
}

std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const std::size_t n = a.nvars();
  if (order == TermOrder::RevLex) {
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t min_index(const Monomial& m) {
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] != 0) return i + 1;
  return 1;
}

std::vector<Monomial> shadow(const Monomial& a) {
  std::vector<Monomial> out;
  const std::size_t top = min_index(a);
  out.reserve(top);
  // x_1 a > x_2 a > ... in any degree-compatible order refining x1 > x2 > ...
  for (std::size_t i = 0; i < top; ++i) out.push_back(a.times_variable(i));
  return out;
}

Monomial max_shadow(const Monomial& a) { return shadow(a).front(); }
Monomial min_shadow(const Monomial& a) { return shadow(a).back(); }

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d, TermOrder order) {
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  // Enumerate compositions of d into nvars parts.
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == nvars) {
      exps[pos] = left;
      out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (nvars == 0) return out;
  rec(rec, 0, static_cast<int>(d));
  std::sort(out.begin(), out.end(), DescendingIn{order});
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace ginshift
