#include "mhproj/matrix.hpp"

#include <cassert>
#include <utility>

#include "mhproj/lattice.hpp"

namespace mhproj {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<Ivec>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    assert(columns[j].size() == rows);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Ivec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == c);
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Ivec IntMatrix::column(std::size_t j) const {
  Ivec v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

Ivec IntMatrix::row(std::size_t i) const {
  Ivec v(cols);
  for (std::size_t j = 0; j < cols; ++j) v[j] = (*this)(i, j);
  return v;
}

std::vector<Ivec> IntMatrix::columns() const {
  std::vector<Ivec> out(cols);
  for (std::size_t j = 0; j < cols; ++j) out[j] = column(j);
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows; ++r) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::truncate_cols(std::size_t k) {
  assert(k <= cols);
  if (k == cols) return;
  IntMatrix m(rows, k);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
  *this = std::move(m);
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols == b.rows);
  IntMatrix m(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

Ivec mul(const IntMatrix& a, const Ivec& v) {
  assert(a.cols == v.size());
  Ivec w(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) w[i] += a(i, j) * v[j];
  return w;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix m(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m(j, i) = a(i, j);
  return m;
}

Int determinant(IntMatrix a) {
  assert(a.rows == a.cols);
  const std::size_t n = a.rows;
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) { return hermite_columns(a).cols; }

}  // namespace mhproj
