#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pdectl/module.hpp"
#include "pdectl/polynomial.hpp"

namespace pdectl {

/// A rows x cols matrix over A = Q[x1..xn]; presents a system P(d) by its
/// rows or a potential R(d) by its columns.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  /// Zero matrix.
  PolyMatrix(std::size_t nvars, std::size_t rows, std::size_t cols);

  static PolyMatrix from_rows(std::size_t nvars, std::size_t cols, const std::vector<std::vector<Polynomial>>& rows);
  static PolyMatrix from_rows(std::size_t nvars, std::size_t cols, std::span<const FreeModuleElement> rows);
  static PolyMatrix from_columns(std::size_t nvars, std::size_t rows, std::span<const FreeModuleElement> cols);
  static PolyMatrix identity(std::size_t nvars, std::size_t size);

  std::size_t nvars() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  FreeModuleElement row(std::size_t i) const;
  FreeModuleElement column(std::size_t j) const;
  std::vector<FreeModuleElement> row_elements() const;
  std::vector<FreeModuleElement> column_elements() const;

  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& other) const;
  bool is_zero() const;
  int max_degree() const;

  /// Square submatrix on the given rows and columns.
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  /// Fraction-free (Bareiss) determinant. Square matrices only.
  Polynomial determinant() const;
  /// Rank over the fraction field, by Bareiss elimination with minimal-degree pivots.
  std::size_t rank() const;
  /// All r x r minors (r = 0 gives the single minor 1); zero minors are kept.
  std::vector<Polynomial> minors(std::size_t r) const;

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

/// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r);

}  // namespace pdectl
