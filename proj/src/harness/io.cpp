#include "ginshift/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ginshift/errors.hpp"
#include "ginshift/poly_io.hpp"

namespace ginshift {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::size_t column_of(const Line&, std::size_t offset) { return offset + 1; }

// Parses a positive decimal at `pos`, advancing it.
std::size_t read_count(const Line& line, std::size_t& pos, const char* what) {
  std::size_t value = 0;
  const char* begin = line.text.data() + pos;
  const char* end = line.text.data() + line.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) throw ParseError(line.number, column_of(line, pos), std::string("expected ") + what);
  if (value == 0) throw ParseError(line.number, column_of(line, pos), std::string(what) + " must be positive");
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

void skip_spaces(const Line& line, std::size_t& pos) {
  while (pos < line.text.size() && (line.text[pos] == ' ' || line.text[pos] == '\t')) ++pos;
}

void expect_end(const Line& line, std::size_t pos) {
  skip_spaces(line, pos);
  if (pos != line.text.size()) throw ParseError(line.number, column_of(line, pos), "unexpected trailing input");
}

// Reads `keyword` at the start of the line, returning the position after it.
std::size_t expect_keyword(const Line& line, std::string_view keyword) {
  std::size_t pos = 0;
  skip_spaces(line, pos);
  if (line.text.substr(pos, keyword.size()) != keyword)
    throw ParseError(line.number, column_of(line, pos), "expected '" + std::string(keyword) + "' header");
  pos += keyword.size();
  const std::size_t before = pos;
  skip_spaces(line, pos);
  if (pos == before) throw ParseError(line.number, column_of(line, pos), "expected a space after '" + std::string(keyword) + "'");
  return pos;
}

}  // namespace

IdealFile parse_ideal(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'ring' header");
  const Line& header = lines.front();
  std::size_t pos = expect_keyword(header, "ring");
  const std::size_t first = read_count(header, pos, "variable count");
  std::optional<std::size_t> second;
  skip_spaces(header, pos);
  if (pos < header.text.size() && header.text[pos] == '+') {
    ++pos;
    skip_spaces(header, pos);
    second = read_count(header, pos, "second block size");
  }
  expect_end(header, pos);
  const std::size_t nvars = first + second.value_or(0);
  if (nvars > Monomial::kMaxVars)
    throw ParseError(header.number, 1, "at most " + std::to_string(Monomial::kMaxVars) + " variables are supported");

  std::optional<SplitRing> split;
  if (second) split.emplace(first, *second);
  std::vector<Polynomial> all, block1, block2;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    Polynomial p = parse_polynomial(line.text, nvars, line.number);
    if (p.is_zero()) throw ParseError(line.number, 1, "zero generator");
    if (!p.is_homogeneous())
      throw InhomogeneousError("line " + std::to_string(line.number) + ": inhomogeneous generator " + to_string(p));
    if (split) {
      const std::uint64_t s = support(p);
      if ((s & ~split->block1()) == 0) {
        block1.push_back(p);
      } else if ((s & ~split->block2()) == 0) {
        block2.push_back(p);
      } else {
        throw BlockViolation("line " + std::to_string(line.number) + ": generator " + to_string(p) +
                             " mixes variables of both blocks");
      }
    }
    all.push_back(std::move(p));
  }
  IdealFile out{IdealPresentation(RingContext(nvars), std::move(all)), split, std::nullopt, std::nullopt};
  if (split) {
    out.first.emplace(RingContext(nvars), std::move(block1));
    out.second.emplace(RingContext(nvars), std::move(block2));
  }
  return out;
}

SimplicialComplex parse_complex(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'vertices' header");
  const Line& header = lines.front();
  std::size_t pos = expect_keyword(header, "vertices");
  const std::size_t n = read_count(header, pos, "vertex count");
  expect_end(header, pos);
  if (n > SimplicialComplex::kMaxVertices) throw ParseError(header.number, 1, "at most 20 vertices are supported");
  std::vector<Face> facets;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    std::size_t p = 0;
    skip_spaces(line, p);
    if (line.text[p] == '-') {
      expect_end(line, p + 1);
      facets.push_back(0);
      continue;
    }
    Face f = 0;
    for (;;) {
      skip_spaces(line, p);
      const std::size_t at = p;
      const std::size_t v = read_count(line, p, "vertex index");
      if (v > n) throw ParseError(line.number, column_of(line, at), "vertex " + std::to_string(v) + " exceeds " + std::to_string(n));
      f |= Face{1} << (v - 1);
      skip_spaces(line, p);
      if (p == line.text.size()) break;
      if (line.text[p] != ',') throw ParseError(line.number, column_of(line, p), "expected ',' between vertices");
      ++p;
    }
    facets.push_back(f);
  }
  return facets.empty() ? SimplicialComplex(n) : SimplicialComplex(n, std::move(facets));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IdealFile parse_ideal_file(const std::string& path) { return parse_ideal(read_file(path)); }

SimplicialComplex parse_complex_file(const std::string& path) { return parse_complex(read_file(path)); }

}  // namespace ginshift
