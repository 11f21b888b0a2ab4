#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ginshift/monomial.hpp"
#include "ginshift/polynomial.hpp"

namespace ginshift {

/// Parses the polynomial grammar
///
///   poly     := ['+'|'-'] term (('+'|'-') term)*
///   term     := rational ['*'] factor ('*' factor)*  |  rational  |  factor ('*' factor)*
///   factor   := 'x' k ['^' e]
///   rational := p | p '/' q
///
/// with whitespace ignored, e.g. "3/2*x1^2*x3 - x2*x4". Variables must be
/// x1..x<nvars>. Errors throw ParseError with the given line and the column
/// of the offending character.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, std::size_t line = 0,
                            TermOrder order = TermOrder::RevLex);

/// A single monomial such as "x1*x3^2" or "1".
Monomial parse_monomial(std::string_view text, std::size_t nvars);

/// Inverse of parse_polynomial: "3/2*x1^2*x3 - x2*x4", "0" for zero.
std::string to_string(const Polynomial& p);

}  // namespace ginshift
