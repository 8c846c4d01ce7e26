#pragma once

#include <vector>

#include "monoap/linear.hpp"

namespace monoap {

using Matrix = std::vector<std::vector<Rational>>;

enum class SolveKind { Unique, Affine, Inconsistent };

struct LinearSolveResult {
  SolveKind kind = SolveKind::Inconsistent;
  Point particular;                 // empty when Inconsistent
  std::vector<Point> nullspace;     // empty unless Affine
};

/// Exact Gauss-Jordan elimination of A x = b. Pivots are chosen by the first
/// nonzero entry in the column. Free variables are set to zero in the
/// particular solution; each nullspace vector has one free variable equal to
/// one and is scaled so that its first nonzero entry is positive.
/// Throws std::invalid_argument on ragged rows or a size mismatch with b.
LinearSolveResult solve_linear(const Matrix& a, const Point& b);

}  // namespace monoap
