#pragma once

#include <vector>

#include "monoap/rational.hpp"

namespace monoap::detail {

/// maximize c.y subject to A y <= b, y >= 0.
struct StandardForm {
  int num_cols = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class SimplexStatus { Optimal, Infeasible, Unbounded };

struct SimplexOutcome {
  SimplexStatus status = SimplexStatus::Infeasible;
  std::vector<Rational> y;
  Rational value;
  long pivots = 0;
};

SimplexOutcome solve_standard_form(const StandardForm& sf);

}  // namespace monoap::detail
