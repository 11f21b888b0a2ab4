#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ginshift {

/// Variable count and display names of a polynomial ring K[x1..xN].
/// Position defines precedence: x1 > x2 > ... > xN.
class RingContext {
 public:
  explicit RingContext(std::size_t nvars);
  RingContext(std::vector<std::string> names);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t index) const { return names_.at(index); }

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::vector<std::string> names_;
};

enum class TermOrder : std::uint8_t { RevLex, Lex };

std::string to_string(TermOrder order);

/// Exponent vector x^a. Variables are addressed 0-based in the API
/// (exponent(0) is the power of x1); min_index() reports the 1-based index.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 32;
  using Exponent = std::uint8_t;

  Monomial() = default;
  /// The unit monomial of a ring with `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  static Monomial from_exponents(std::span<const int> exponents);
  /// x_{index+1} in a ring with `nvars` variables.
  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(std::size_t index) const noexcept { return exps_[index]; }
  unsigned operator[](std::size_t index) const noexcept { return exps_[index]; }
  bool is_unit() const noexcept { return degree_ == 0; }
  std::vector<int> exponents() const;

  /// Support as a bitmask (bit i set iff x_{i+1} divides this monomial).
  std::uint64_t support() const noexcept;
  bool is_squarefree() const noexcept;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// Multiplies by x_{index+1}.
  Monomial times_variable(std::size_t index) const;
  /// Divides by x_{index+1}; requires the variable to divide.
  Monomial divided_by_variable(std::size_t index) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;

  friend Monomial quotient(const Monomial&, const Monomial&);
  friend Monomial lcm(const Monomial&, const Monomial&);
  friend Monomial gcd(const Monomial&, const Monomial&);
};

/// a divides b, i.e. a ⪯ b entrywise.
bool divides(const Monomial& a, const Monomial& b);
/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Degree-compatible comparison. RevLex: equal degrees are decided by the
/// last nonzero entry of a-b (positive means a is smaller). Lex: by the first
/// nonzero entry (negative means a is smaller). Throws ContextMismatch when
/// the variable counts differ.
std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b);

/// Strict "greater" predicate, for sorting in descending order.
struct DescendingIn {
  TermOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(order, a, b) == std::strong_ordering::greater;
  }
};

/// Smallest 1-based index of a variable dividing m; 1 for the unit monomial.
std::size_t min_index(const Monomial& m);

/// Sh(a) = { x_i * a : 1 <= i <= min_index(a) }, sorted descending in RevLex.
std::vector<Monomial> shadow(const Monomial& a);
Monomial max_shadow(const Monomial& a);
Monomial min_shadow(const Monomial& a);

/// All monomials of degree d in nvars variables, sorted descending in `order`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d,
                                          TermOrder order = TermOrder::RevLex);

/// "x1^2*x3", or "1" for the unit. Uses x<k> names.
std::string to_string(const Monomial& m);

}  // namespace ginshift

template <>
struct std::hash<ginshift::Monomial> {
  std::size_t operator()(const ginshift::Monomial& m) const noexcept { return m.hash(); }
};
