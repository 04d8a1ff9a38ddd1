#include "qtaft/linalg.hpp"

#include <algorithm>

namespace qtaft {

std::vector<size_t> reduced_row_echelon(CycMatrix& m) {
  std::vector<size_t> pivot_cols;
  if (m.empty()) return pivot_cols;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const CycNum inv = m[row][col].inverse();
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const CycNum factor = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  m.resize(row, CycVector(cols));
  return pivot_cols;
}

size_t matrix_rank(CycMatrix m) { return reduced_row_echelon(m).size(); }

std::vector<CycVector> kernel_basis(const CycMatrix& m, size_t columns) {
  CycMatrix work = m;
  for (auto& row : work) row.resize(columns, CycNum());
  const std::vector<size_t> pivots = reduced_row_echelon(work);
  std::vector<bool> is_pivot(columns, false);
  for (const size_t p : pivots) is_pivot[p] = true;
  std::vector<CycVector> basis;
  for (size_t free_col = 0; free_col < columns; ++free_col) {
    if (is_pivot[free_col]) continue;
    CycVector v(columns, CycNum());
    v[free_col] = CycNum(1);
    for (size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -work[i][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<CycVector> solve(const CycMatrix& m, const CycVector& rhs) {
  if (m.empty()) {
    for (const auto& c : rhs)
      if (!c.is_zero()) return std::nullopt;
    return CycVector{};
  }
  const size_t cols = m[0].size();
  CycMatrix augmented = m;
  for (size_t i = 0; i < m.size(); ++i) augmented[i].push_back(rhs[i]);
  const std::vector<size_t> pivots = reduced_row_echelon(augmented);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
  CycVector x(cols, CycNum());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = augmented[i][cols];
  return x;
}

bool in_row_span(const CycMatrix& rows, const CycVector& v) {
  if (std::all_of(v.begin(), v.end(), [](const CycNum& c) { return c.is_zero(); }))
    return true;
  // v in span(rows) iff rank does not grow.
  CycMatrix with = rows;
  with.push_back(v);
  return matrix_rank(rows) == matrix_rank(std::move(with));
}

bool span_contained(const CycMatrix& inner, const CycMatrix& outer) {
  CycMatrix joint = outer;
  joint.insert(joint.end(), inner.begin(), inner.end());
  return matrix_rank(outer) == matrix_rank(std::move(joint));
}

}  // namespace qtaft
