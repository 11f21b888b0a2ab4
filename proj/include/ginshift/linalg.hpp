#pragma once

#include <cstddef>
#include <vector>

#include "ginshift/matrix.hpp"
#include "ginshift/rational.hpp"

namespace ginshift::linalg {

using RationalRow = std::vector<Rational>;
using IntegerRow = std::vector<Integer>;

/// Fraction-free row echelon form over the integers. Rows are eliminated
/// column by column from the left; after each elimination step a row is
/// divided by its content. Returns the pivot columns in increasing order.
/// The rows are left in echelon form (zero rows removed).
std::vector<std::size_t> integer_echelon(std::vector<IntegerRow>& rows, std::size_t cols);

/// Scales a rational row by the lcm of its denominators.
IntegerRow clear_denominators(const RationalRow& row);

std::size_t rank(const std::vector<RationalRow>& rows, std::size_t cols);
std::size_t rank(const RationalMatrix& m);

/// Pivot columns of the row space, leftmost-first elimination.
std::vector<std::size_t> pivot_columns(const std::vector<RationalRow>& rows, std::size_t cols);

/// Is `v` in the row span of `rows`?
bool in_row_span(const RationalRow& v, const std::vector<RationalRow>& rows, std::size_t cols);

/// Basis of { z : rows * z = 0 } (right kernel), from the reduced row
/// echelon form: one vector per free column.
std::vector<RationalRow> nullspace(const std::vector<RationalRow>& rows, std::size_t cols);

/// Bareiss determinant.
Rational determinant(const RationalMatrix& m);

/// Gauss-Jordan inverse; throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace ginshift::linalg
