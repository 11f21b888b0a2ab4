#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ginshift {

/// Two operands live in rings with different variable counts.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. Line and column are 1-based; line 0 means
/// the input was a single expression rather than a file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(format(line, column, what)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& what) {
    std::string where = line == 0 ? "" : "line " + std::to_string(line) + ", ";
    return where + "column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A generator of an ideal is not homogeneous.
class InhomogeneousError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator uses variables outside its declared block of a split ring.
class BlockViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ginshift
