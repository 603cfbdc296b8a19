#pragma once

#include <cstddef>
#include <vector>

#include "mhproj/numeric.hpp"

namespace mhproj {

/// Dense integer matrix, row-major, exact entries.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Ivec data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Int& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<Ivec>& columns);
  static IntMatrix from_rows(const std::vector<Ivec>& rows);

  Ivec column(std::size_t j) const;
  Ivec row(std::size_t i) const;
  std::vector<Ivec> columns() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Keep only the first k columns.
  void truncate_cols(std::size_t k);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
Ivec mul(const IntMatrix& a, const Ivec& v);
IntMatrix transpose(const IntMatrix& a);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int determinant(IntMatrix a);

std::size_t rank(const IntMatrix& a);

}  // namespace mhproj
