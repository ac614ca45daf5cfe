#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "splitegh/scalar.hpp"

namespace splitegh {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

/// Incrementally maintained reduced row-echelon form.
///
/// Rows are sorted by pivot column, every pivot is 1, and every pivot column
/// is zero in all other rows. The result is canonical for the row space.
class Echelon {
 public:
  Echelon(Field field, std::size_t cols) : field_(field), cols_(cols), pivot_row_(cols, npos) {}

  Field field() const noexcept { return field_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == cols_; }

  /// Adds v to the row space; returns true if the rank grew.
  bool insert(Row v);
  /// Eliminates every pivot column from v in place.
  void reduce(Row& v) const;
  bool contains(const Row& v) const;

  const Matrix& rows() const noexcept { return rows_; }
  std::vector<std::size_t> pivots() const;
  bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }
  Matrix take_rows() && { return std::move(rows_); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Field field_;
  std::size_t cols_;
  Matrix rows_;
  std::vector<std::size_t> pivot_row_;  // column -> row index, or npos
};

/// Canonical RREF of the span of the given rows.
Matrix row_reduce(Field field, std::size_t cols, const Matrix& rows);

/// Exact determinant by fraction-producing Gaussian elimination.
Scalar determinant(Field field, Matrix m);

/// Solves x * m = rhs for a square invertible m (row-vector convention).
/// Returns nullopt when m is singular.
std::optional<Row> solve_left(Field field, const Matrix& m, const Row& rhs);

std::optional<Matrix> inverse(Field field, const Matrix& m);

/// A basis of { y : y * m = 0 } where m has the given row count.
Matrix left_kernel(Field field, std::size_t rows, std::size_t cols, const Matrix& m);

}  // namespace splitegh
