#include "splitegh/linalg.hpp"

#include <algorithm>
#include <utility>

#include "splitegh/errors.hpp"

namespace splitegh {

void Echelon::reduce(Row& v) const {
  if (v.size() != cols_) throw DimensionError("row length does not match the echelon width");
  for (std::size_t c = 0; c < cols_; ++c) {
    const std::size_t r = pivot_row_[c];
    if (r == npos || v[c].is_zero()) continue;
    const Scalar f = v[c];
    const Row& row = rows_[r];
    for (std::size_t k = c; k < cols_; ++k)
      if (!row[k].is_zero()) v[k].sub_mul(f, row[k]);
  }
}

bool Echelon::contains(const Row& v) const {
  Row w = v;
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Echelon::insert(Row v) {
  if (full()) return false;
  reduce(v);
  std::size_t p = 0;
  while (p < cols_ && v[p].is_zero()) ++p;
  if (p == cols_) return false;

  if (!v[p].is_one()) {
    const Scalar inv = v[p].inverse();
    for (std::size_t k = p; k < cols_; ++k)
      if (!v[k].is_zero()) v[k] *= inv;
  }
  for (Row& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar f = row[p];
    for (std::size_t k = p; k < cols_; ++k)
      if (!v[k].is_zero()) row[k].sub_mul(f, v[k]);
  }

  // keep rows sorted by pivot column
  std::size_t pos = 0;
  for (std::size_t c = 0; c < p; ++c)
    if (pivot_row_[c] != npos) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  for (std::size_t c = p + 1; c < cols_; ++c)
    if (pivot_row_[c] != npos) ++pivot_row_[c];
  pivot_row_[p] = pos;
  return true;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] != npos) out.push_back(c);
  return out;
}

Matrix row_reduce(Field field, std::size_t cols, const Matrix& rows) {
  Echelon e(field, cols);
  for (const Row& r : rows) {
    if (e.full()) break;
    e.insert(r);
  }
  return std::move(e).take_rows();
}

Scalar determinant(Field field, Matrix m) {
  const std::size_t n = m.size();
  for (const Row& r : m)
    if (r.size() != n) throw DimensionError("determinant of a non-square matrix");
  Scalar det = Scalar::one(field);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Scalar::zero(field);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Scalar inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Scalar f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k].sub_mul(f, m[c][k]);
    }
  }
  return det;
}

std::optional<Matrix> inverse(Field field, const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionError("inverse of a non-square matrix");
    Row r = m[i];
    r.resize(2 * n, Scalar::zero(field));
    r[n + i] = Scalar::one(field);
    aug.push_back(std::move(r));
  }
  Matrix red = row_reduce(field, 2 * n, aug);
  if (red.size() < n) return std::nullopt;
  Matrix out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!red[i][i].is_one()) return std::nullopt;
    out.emplace_back(red[i].begin() + static_cast<std::ptrdiff_t>(n), red[i].end());
  }
  return out;
}

std::optional<Row> solve_left(Field field, const Matrix& m, const Row& rhs) {
  auto inv = inverse(field, m);
  if (!inv) return std::nullopt;
  const std::size_t n = m.size();
  Row x(n, Scalar::zero(field));
  for (std::size_t i = 0; i < n; ++i) {
    if (rhs[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) x[j] += rhs[i] * (*inv)[i][j];
  }
  return x;
}

Matrix left_kernel(Field field, std::size_t rows, std::size_t cols, const Matrix& m) {
  // y * m = 0  <=>  m^T y^T = 0: read the null space off the RREF of m^T.
  Matrix transposed(cols, Row(rows, Scalar::zero(field)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!m[i][j].is_zero()) transposed[j][i] = m[i][j];
  Echelon e(field, rows);
  for (Row& r : transposed) e.insert(std::move(r));

  std::vector<std::size_t> pivot_of_row = e.pivots();
  Matrix basis;
  for (std::size_t f = 0; f < rows; ++f) {
    if (e.is_pivot(f)) continue;
    Row y(rows, Scalar::zero(field));
    y[f] = Scalar::one(field);
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i)
      if (!e.rows()[i][f].is_zero()) y[pivot_of_row[i]] = -e.rows()[i][f];
    basis.push_back(std::move(y));
  }
  return row_reduce(field, rows, basis);
}

}  // namespace splitegh
