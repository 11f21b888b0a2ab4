#include "ginshift/poly_io.hpp"

#include <cctype>
#include <string>

#include "ginshift/errors.hpp"

namespace ginshift {

namespace {

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const { throw ParseError(line_, pos + 1, what); }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// factor := 'x' k ['^' e]; multiplies the exponent into exps.
void parse_factor(Lexer& lx, std::size_t nvars, std::vector<int>& exps) {
  lx.skip_space();
  const std::size_t start = lx.position();
  if (!lx.accept('x')) lx.fail("expected a variable x<k>");
  const std::string idx_text = lx.digits();
  const unsigned long idx = std::stoul(idx_text);
  if (idx < 1 || idx > nvars)
    lx.fail_at(start, "variable x" + idx_text + " outside the ring x1..x" + std::to_string(nvars));
  int e = 1;
  if (lx.accept('^')) {
    const std::string e_text = lx.digits();
    if (e_text.size() > 3 || std::stoi(e_text) > 255) lx.fail("exponent too large");
    e = std::stoi(e_text);
  }
  exps[idx - 1] += e;
  if (exps[idx - 1] > 255) lx.fail("exponent too large");
}

Rational parse_rational(Lexer& lx) {
  Integer num(lx.digits());
  Integer den = 1;
  if (lx.accept('/')) {
    den = Integer(lx.digits());
    if (den == 0) lx.fail("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Term parse_term(Lexer& lx, std::size_t nvars) {
  std::vector<int> exps(nvars, 0);
  Rational coeff = 1;
  bool have_factor = false;
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    coeff = parse_rational(lx);
    if (lx.accept('*')) {
      parse_factor(lx, nvars, exps);
      have_factor = true;
    } else if (lx.peek() == 'x') {
      parse_factor(lx, nvars, exps);
      have_factor = true;
    }
  } else {
    parse_factor(lx, nvars, exps);
    have_factor = true;
  }
  while (have_factor && lx.accept('*')) parse_factor(lx, nvars, exps);
  return {Monomial::from_exponents(exps), coeff};
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, std::size_t line, TermOrder order) {
  Lexer lx(text, line);
  if (lx.at_end()) lx.fail("empty polynomial");
  std::vector<Term> terms;
  bool first = true;
  while (!lx.at_end()) {
    bool negative = false;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      negative = true;
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    Term t = parse_term(lx, nvars);
    if (negative) t.coefficient = -t.coefficient;
    terms.push_back(std::move(t));
    first = false;
  }
  return Polynomial(nvars, std::move(terms), order);
}

Monomial parse_monomial(std::string_view text, std::size_t nvars) {
  Polynomial p = parse_polynomial(text, nvars);
  if (p.size() != 1 || p.leading_coefficient() != 1)
    throw ParseError(0, 1, "expected a single monomial, got '" + std::string(text) + "'");
  return p.leading_monomial();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.coefficient;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_unit()) {
      s += c.get_str();
    } else if (c == 1) {
      s += to_string(t.monomial);
    } else {
      s += c.get_str() + "*" + to_string(t.monomial);
    }
  }
  return s;
}

}  // namespace ginshift
