#include "ginshift/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ginshift {

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

}  // namespace ginshift

namespace ginshift::linalg {

namespace {

void remove_content(IntegerRow& row) {
  Integer g = 0;
  for (const Integer& v : row) {
    if (sgn(v) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (Integer& v : row)
      if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::vector<IntegerRow> to_integer_rows(const std::vector<RationalRow>& rows) {
  std::vector<IntegerRow> out;
  out.reserve(rows.size());
  for (const RationalRow& r : rows) out.push_back(clear_denominators(r));
  return out;
}

std::vector<RationalRow> to_rows(const RationalMatrix& m) {
  std::vector<RationalRow> rows(m.rows(), RationalRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

IntegerRow clear_denominators(const RationalRow& row) {
  Integer l = common_denominator(row);
  IntegerRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (sgn(row[j]) == 0) continue;
    Integer scale = l / row[j].get_den();
    out[j] = row[j].get_num() * scale;
  }
  return out;
}

std::vector<std::size_t> integer_echelon(std::vector<IntegerRow>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("row length does not match column count");
    remove_content(r);
  }
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    // Pick the nonzero entry of smallest magnitude to keep growth down.
    std::size_t best = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      if (best == rows.size() || mpz_cmpabs(rows[r][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    const IntegerRow& piv = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), piv[col].get_mpz_t(), rows[r][col].get_mpz_t());
      Integer a = piv[col] / g;
      Integer b = rows[r][col] / g;
      IntegerRow& row = rows[r];
      for (std::size_t j = col; j < cols; ++j) {
        if (sgn(piv[j]) == 0) {
          if (sgn(row[j]) != 0) row[j] *= a;
        } else {
          row[j] = a * row[j] - b * piv[j];
        }
      }
      remove_content(row);
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::vector<std::size_t> pivot_columns(const std::vector<RationalRow>& rows, std::size_t cols) {
  auto ints = to_integer_rows(rows);
  return integer_echelon(ints, cols);
}

std::size_t rank(const std::vector<RationalRow>& rows, std::size_t cols) {
  return pivot_columns(rows, cols).size();
}

std::size_t rank(const RationalMatrix& m) { return rank(to_rows(m), m.cols()); }

bool in_row_span(const RationalRow& v, const std::vector<RationalRow>& rows, std::size_t cols) {
  std::vector<RationalRow> extended = rows;
  extended.push_back(v);
  return rank(extended, cols) == rank(rows, cols);
}

std::vector<RationalRow> nullspace(const std::vector<RationalRow>& rows, std::size_t cols) {
  // Reduced row echelon form over Q, seeded with the integer echelon rows.
  auto ints = to_integer_rows(rows);
  std::vector<std::size_t> pivots = integer_echelon(ints, cols);
  std::vector<RationalRow> rref(ints.size(), RationalRow(cols));
  for (std::size_t r = 0; r < ints.size(); ++r)
    for (std::size_t j = 0; j < cols; ++j) rref[r][j] = Rational(ints[r][j]);
  for (std::size_t r = rref.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    Rational inv = 1 / rref[r][pc];
    for (std::size_t j = pc; j < cols; ++j) rref[r][j] *= inv;
    for (std::size_t above = 0; above < r; ++above) {
      if (sgn(rref[above][pc]) == 0) continue;
      Rational f = rref[above][pc];
      for (std::size_t j = pc; j < cols; ++j) rref[above][j] -= f * rref[r][j];
    }
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t pc : pivots) is_pivot[pc] = true;
  std::vector<RationalRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalRow z(cols);
    z[free] = 1;
    for (std::size_t r = 0; r < rref.size(); ++r) z[pivots[r]] = -rref[r][free];
    basis.push_back(std::move(z));
  }
  return basis;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss on the integer matrix obtained by clearing row denominators.
  std::vector<IntegerRow> a = to_integer_rows(to_rows(m));
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    RationalRow row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
    scale /= Rational(common_denominator(row));
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a[swap][k]) == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return Rational(a[n - 1][n - 1] * sign) * scale;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n) throw std::domain_error("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rational f = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= f;
      inv(col, j) *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      Rational g = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= g * a(col, j);
        inv(r, j) -= g * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace ginshift::linalg
