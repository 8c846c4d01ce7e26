#include "monoap/linsolve.hpp"

#include <stdexcept>

namespace monoap {

LinearSolveResult solve_linear(const Matrix& a, const Point& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: b has the wrong length");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& r : a)
    if (r.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");

  // Augmented copy [A | b].
  Matrix m(rows, Point(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = a[r][c];
    m[r][cols] = b[r];
  }

  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Rational inv = m[row][col].reciprocal();
    for (std::size_t c = col; c <= cols; ++c)
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c <= cols; ++c)
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }

  for (std::size_t r = row; r < rows; ++r)
    if (!m[r][cols].is_zero()) return {SolveKind::Inconsistent, {}, {}};

  LinearSolveResult out;
  out.particular.assign(cols, Rational());
  for (std::size_t r = 0; r < row; ++r) out.particular[pivot_col_of_row[r]] = m[r][cols];

  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Point v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < row; ++r) v[pivot_col_of_row[r]] = -m[r][free];
    for (const auto& e : v) {
      if (e.is_zero()) continue;
      if (e.sign() < 0)
        for (auto& x : v) x = -x;
      break;
    }
    out.nullspace.push_back(std::move(v));
  }
  out.kind = out.nullspace.empty() ? SolveKind::Unique : SolveKind::Affine;
  return out;
}

}  // namespace monoap
