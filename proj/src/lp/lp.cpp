#include "monoap/lp.hpp"

#include <stdexcept>

#include "monoap/errors.hpp"
#include "simplex.hpp"

namespace monoap {
namespace {

// Shifts x = y + lower so every column is nonnegative and writes each
// constraint as rows of A y <= b. When eps_col >= 0, strict rows get +eps.
detail::StandardForm to_standard_form(const LPProblem& p, int eps_col) {
  detail::StandardForm sf;
  sf.num_cols = p.num_vars + (eps_col >= 0 ? 1 : 0);
  sf.c.assign(std::size_t(sf.num_cols), Rational());

  auto push_row = [&](std::vector<Rational> row, Rational rhs) {
    sf.a.push_back(std::move(row));
    sf.b.push_back(std::move(rhs));
  };

  for (int v = 0; v < p.num_vars; ++v) {
    std::vector<Rational> row(std::size_t(sf.num_cols));
    row[v] = 1;
    push_row(std::move(row), p.upper[v] - p.lower[v]);
  }
  for (const auto& con : p.constraints) {
    std::vector<Rational> row(std::size_t(sf.num_cols));
    Rational shifted = con.lhs.constant();
    for (const auto& [v, a] : con.lhs.terms()) {
      row[v] = a;
      shifted += a * p.lower[v];
    }
    switch (con.rel) {
      case Relation::Less:
        if (eps_col >= 0) row[eps_col] = 1;
        push_row(std::move(row), -shifted);
        break;
      case Relation::LessEqual:
        push_row(std::move(row), -shifted);
        break;
      case Relation::Equal: {
        std::vector<Rational> neg(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) neg[j] = -row[j];
        push_row(std::move(row), -shifted);
        push_row(std::move(neg), shifted);
        break;
      }
    }
  }
  return sf;
}

Point unshift(const LPProblem& p, const std::vector<Rational>& y) {
  Point x(static_cast<std::size_t>(p.num_vars));
  for (int v = 0; v < p.num_vars; ++v) x[v] = y[v] + p.lower[v];
  return x;
}

void verify_witness(const LPProblem& p, const Point& x) {
  for (int v = 0; v < p.num_vars; ++v)
    if (x[v] < p.lower[v] || x[v] > p.upper[v]) throw InternalError("LP witness leaves its box");
  for (const auto& c : p.constraints)
    if (!c.satisfied_by(x)) throw InternalError("LP witness violates a constraint");
}

}  // namespace

bool Constraint::satisfied_by(std::span<const Rational> x) const {
  const int s = lhs.eval(x).sign();
  switch (rel) {
    case Relation::Less: return s < 0;
    case Relation::LessEqual: return s <= 0;
    case Relation::Equal: return s == 0;
  }
  return false;
}

LPProblem LPProblem::unit_box(int num_vars) {
  LPProblem p;
  p.num_vars = num_vars;
  p.lower.assign(std::size_t(num_vars), Rational(0));
  p.upper.assign(std::size_t(num_vars), Rational(1));
  return p;
}

void LPProblem::validate() const {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  if (lower.size() != std::size_t(num_vars) || upper.size() != std::size_t(num_vars))
    throw std::invalid_argument("every variable needs a lower and an upper bound");
  for (int v = 0; v < num_vars; ++v)
    if (lower[v] > upper[v]) throw std::invalid_argument("empty box for x" + std::to_string(v));
  for (const auto& c : constraints)
    if (c.lhs.max_var() >= num_vars) throw std::invalid_argument("constraint references an undeclared variable");
  if (objective && objective->max_var() >= num_vars)
    throw std::invalid_argument("objective references an undeclared variable");
}

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Feasible: return "feasible";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "?";
}

LPResult check_feasible_strict(const LPProblem& problem) {
  problem.validate();
  bool has_strict = false;
  for (const auto& c : problem.constraints) has_strict = has_strict || c.is_strict();

  const int eps_col = has_strict ? problem.num_vars : -1;
  auto sf = to_standard_form(problem, eps_col);
  if (has_strict) sf.c[eps_col] = 1;

  auto out = detail::solve_standard_form(sf);
  LPResult res;
  res.pivots = out.pivots;
  if (out.status == detail::SimplexStatus::Infeasible) return res;
  if (out.status == detail::SimplexStatus::Unbounded)
    throw InternalError("eps is unbounded: strict rows do not constrain the slack");

  res.slack = has_strict ? out.value : Rational();
  if (has_strict && res.slack.sign() <= 0) return res;

  res.kind = LPStatus::Feasible;
  res.witness = unshift(problem, out.y);
  verify_witness(problem, res.witness);
  return res;
}

LPResult maximize(const LPProblem& problem) {
  problem.validate();
  if (!problem.objective) throw std::invalid_argument("maximize needs an objective");
  for (const auto& c : problem.constraints)
    if (c.is_strict()) throw std::invalid_argument("maximize does not accept strict constraints");

  auto sf = to_standard_form(problem, -1);
  Rational offset = problem.objective->constant();
  for (const auto& [v, a] : problem.objective->terms()) {
    sf.c[v] = a;
    offset += a * problem.lower[v];
  }

  auto out = detail::solve_standard_form(sf);
  LPResult res;
  res.pivots = out.pivots;
  switch (out.status) {
    case detail::SimplexStatus::Infeasible: return res;
    case detail::SimplexStatus::Unbounded: res.kind = LPStatus::Unbounded; return res;
    case detail::SimplexStatus::Optimal: break;
  }
  res.kind = LPStatus::Optimal;
  res.value = out.value + offset;
  res.witness = unshift(problem, out.y);
  verify_witness(problem, res.witness);
  if (problem.objective->eval(res.witness) != res.value) throw InternalError("LP objective mismatch");
  return res;
}

}  // namespace monoap
