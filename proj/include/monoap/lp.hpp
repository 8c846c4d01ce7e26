#pragma once

// Exact linear programming over the rationals.
//
// A primal two-phase simplex on a dictionary with Bland's rule everywhere,
// so every solve terminates regardless of constraint order. Strict
// inequalities are handled with one shared slack variable eps that is added
// to the left side of every strict row and then maximised; the system is
// strictly feasible iff the exact optimum eps* is positive.

#include <optional>
#include <string>
#include <vector>

#include "monoap/linear.hpp"

namespace monoap {

enum class Relation { Less, LessEqual, Equal };

/// lhs REL 0.
struct Constraint {
  LinearExpr lhs;
  Relation rel = Relation::LessEqual;

  static Constraint less(const LinearExpr& a, const LinearExpr& b) { return {a - b, Relation::Less}; }
  static Constraint less_equal(const LinearExpr& a, const LinearExpr& b) { return {a - b, Relation::LessEqual}; }
  static Constraint equal(const LinearExpr& a, const LinearExpr& b) { return {a - b, Relation::Equal}; }

  bool is_strict() const { return rel == Relation::Less; }
  bool satisfied_by(std::span<const Rational> x) const;
  /// The same constraint with a strict relation relaxed to <=.
  Constraint closure() const { return {lhs, rel == Relation::Less ? Relation::LessEqual : rel}; }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct LPProblem {
  int num_vars = 0;
  std::vector<Constraint> constraints;
  std::optional<LinearExpr> objective;
  std::vector<Rational> lower;  // one per variable
  std::vector<Rational> upper;

  /// Every variable boxed to [0, 1].
  static LPProblem unit_box(int num_vars);

  /// Throws std::invalid_argument when a constraint mentions an undeclared
  /// variable or a box is missing or empty.
  void validate() const;
};

enum class LPStatus { Feasible, Infeasible, Optimal, Unbounded };

struct LPResult {
  LPStatus kind = LPStatus::Infeasible;
  Point witness;    // Feasible / Optimal only
  Rational value;   // Optimal only
  Rational slack;   // eps* for strict-feasibility queries
  long pivots = 0;
};

std::string to_string(LPStatus s);

/// Maximises eps subject to lhs + eps <= 0 on strict rows and the remaining
/// rows unchanged. Feasible (with witness and eps*) iff eps* > 0. A problem
/// with no strict rows is Feasible iff its closed system has a solution, and
/// reports slack 0. The objective, if any, is ignored.
LPResult check_feasible_strict(const LPProblem& problem);

/// Maximises the objective. Strict rows are rejected with std::invalid_argument.
LPResult maximize(const LPProblem& problem);

}  // namespace monoap
