#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ginshift/constructions.hpp"
#include "ginshift/groebner.hpp"
#include "ginshift/simplicial.hpp"

namespace ginshift {

/// Contents of an ideal file. With a `ring <n>+<m>` header every generator
/// must lie in one block; `first` and `second` then hold the two factors.
struct IdealFile {
  IdealPresentation ideal;
  std::optional<SplitRing> split;
  std::optional<IdealPresentation> first;
  std::optional<IdealPresentation> second;
};

/// Header `ring <N>` or `ring <n>+<m>`, then one generator per line; blank
/// lines and lines starting with `#` are skipped. Throws ParseError (syntax,
/// with line and column), InhomogeneousError or BlockViolation.
IdealFile parse_ideal(std::string_view text);
IdealFile parse_ideal_file(const std::string& path);

/// Header `vertices <n>`, then one facet per line as comma-separated
/// indices; `-` is the empty face. No facet lines gives the void complex.
SimplicialComplex parse_complex(std::string_view text);
SimplicialComplex parse_complex_file(const std::string& path);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace ginshift
