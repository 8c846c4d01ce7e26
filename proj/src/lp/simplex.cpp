#include "simplex.hpp"

#include <limits>

#include "monoap/errors.hpp"

namespace monoap::detail {
namespace {

// Dictionary form: x_basic[r] = rhs[r] + sum_j d(r, j) * x_nonbasic[j],
// objective z = z0 + sum_j obj[j] * x_nonbasic[j]. Variable ids: structural
// columns first, then one slack per row, then the phase-one artificial.
class Dictionary {
 public:
  explicit Dictionary(const StandardForm& sf)
      : rows_(static_cast<int>(sf.b.size())), cols_(sf.num_cols), d_(std::size_t(rows_) * cols_),
        rhs_(sf.b), obj_(std::size_t(cols_)), basic_(std::size_t(rows_)), nonbasic_(std::size_t(cols_)) {
    for (int r = 0; r < rows_; ++r) {
      basic_[r] = sf.num_cols + r;
      for (int j = 0; j < cols_; ++j)
        if (!sf.a[r][j].is_zero()) at(r, j) = -sf.a[r][j];
    }
    for (int j = 0; j < cols_; ++j) nonbasic_[j] = j;
  }

  int rows() const { return rows_; }
  long pivots() const { return pivots_; }
  const Rational& z0() const { return z0_; }

  bool needs_phase_one() const {
    for (const auto& r : rhs_)
      if (r.sign() < 0) return true;
    return false;
  }

  // Chvatal's auxiliary problem: one artificial column a with coefficient +1
  // in every row, maximise -a.
  bool phase_one(int artificial_id) {
    add_column(artificial_id, Rational(1));
    const int acol = cols_ - 1;
    std::fill(obj_.begin(), obj_.end(), Rational());
    obj_[acol] = -1;
    z0_ = 0;

    int leave = -1;
    for (int r = 0; r < rows_; ++r) {
      if (leave < 0 || rhs_[r] < rhs_[leave] || (rhs_[r] == rhs_[leave] && basic_[r] < basic_[leave]))
        leave = r;
    }
    pivot(leave, acol);
    if (run() != SimplexStatus::Optimal) throw InternalError("phase one is bounded by construction");
    if (z0_.sign() < 0) return false;

    // Drive a degenerate artificial out of the basis before dropping it.
    for (int r = 0; r < rows_; ++r) {
      if (basic_[r] != artificial_id) continue;
      int enter = -1;
      for (int j = 0; j < cols_; ++j)
        if (!at(r, j).is_zero() && (enter < 0 || nonbasic_[j] < nonbasic_[enter])) enter = j;
      if (enter < 0) throw InternalError("artificial row with no nonzero entry");
      pivot(r, enter);
      break;
    }
    for (int j = 0; j < cols_; ++j) {
      if (nonbasic_[j] == artificial_id) {
        remove_column(j);
        break;
      }
    }
    return true;
  }

  void set_objective(const std::vector<Rational>& c) {
    std::fill(obj_.begin(), obj_.end(), Rational());
    z0_ = 0;
    const int nc = static_cast<int>(c.size());
    for (int j = 0; j < cols_; ++j)
      if (nonbasic_[j] < nc) obj_[j] += c[nonbasic_[j]];
    for (int r = 0; r < rows_; ++r) {
      if (basic_[r] >= nc || c[basic_[r]].is_zero()) continue;
      const Rational& cv = c[basic_[r]];
      z0_ += cv * rhs_[r];
      for (int j = 0; j < cols_; ++j)
        if (!at(r, j).is_zero()) obj_[j] += cv * at(r, j);
    }
  }

  // Bland's rule: smallest-id improving column, smallest-id leaving row among ratio ties.
  SimplexStatus run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j)
        if (obj_[j].sign() > 0 && (enter < 0 || nonbasic_[j] < nonbasic_[enter])) enter = j;
      if (enter < 0) return SimplexStatus::Optimal;

      int leave = -1;
      Rational best;
      for (int r = 0; r < rows_; ++r) {
        const Rational& a = at(r, enter);
        if (a.sign() >= 0) continue;
        Rational ratio = rhs_[r] / -a;
        if (leave < 0 || ratio < best || (ratio == best && basic_[r] < basic_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return SimplexStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  std::vector<Rational> values(int num_structural) const {
    std::vector<Rational> y(static_cast<std::size_t>(num_structural));
    for (int r = 0; r < rows_; ++r)
      if (basic_[r] < num_structural) y[basic_[r]] = rhs_[r];
    return y;
  }

 private:
  Rational& at(int r, int j) { return d_[std::size_t(r) * cols_ + j]; }
  const Rational& at(int r, int j) const { return d_[std::size_t(r) * cols_ + j]; }

  void pivot(int l, int e) {
    ++pivots_;
    const Rational f = -at(l, e).reciprocal();
    rhs_[l] *= f;
    for (int j = 0; j < cols_; ++j)
      if (j != e && !at(l, j).is_zero()) at(l, j) *= f;
    at(l, e) = -f;

    auto eliminate = [&](Rational& rhs, Rational* row) {
      const Rational coef = row[e];
      if (coef.is_zero()) return;
      rhs += coef * rhs_[l];
      const Rational* pr = &d_[std::size_t(l) * cols_];
      for (int j = 0; j < cols_; ++j) {
        if (j == e || pr[j].is_zero()) continue;
        row[j] += coef * pr[j];
      }
      row[e] = coef * pr[e];
    };
    for (int r = 0; r < rows_; ++r)
      if (r != l) eliminate(rhs_[r], &d_[std::size_t(r) * cols_]);
    eliminate(z0_, obj_.data());

    std::swap(basic_[l], nonbasic_[e]);
  }

  void add_column(int id, const Rational& coef) {
    std::vector<Rational> nd(std::size_t(rows_) * (cols_ + 1));
    for (int r = 0; r < rows_; ++r) {
      for (int j = 0; j < cols_; ++j) nd[std::size_t(r) * (cols_ + 1) + j] = at(r, j);
      nd[std::size_t(r) * (cols_ + 1) + cols_] = coef;
    }
    d_ = std::move(nd);
    ++cols_;
    obj_.emplace_back();
    nonbasic_.push_back(id);
  }

  void remove_column(int col) {
    std::vector<Rational> nd(std::size_t(rows_) * (cols_ - 1));
    for (int r = 0; r < rows_; ++r)
      for (int j = 0, k = 0; j < cols_; ++j)
        if (j != col) nd[std::size_t(r) * (cols_ - 1) + k++] = at(r, j);
    d_ = std::move(nd);
    --cols_;
    obj_.erase(obj_.begin() + col);
    nonbasic_.erase(nonbasic_.begin() + col);
  }

  int rows_;
  int cols_;
  std::vector<Rational> d_;
  std::vector<Rational> rhs_;
  std::vector<Rational> obj_;
  Rational z0_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  long pivots_ = 0;
};

}  // namespace

SimplexOutcome solve_standard_form(const StandardForm& sf) {
  Dictionary dict(sf);
  SimplexOutcome out;
  if (dict.needs_phase_one() && !dict.phase_one(sf.num_cols + dict.rows())) {
    out.status = SimplexStatus::Infeasible;
    out.pivots = dict.pivots();
    return out;
  }
  dict.set_objective(sf.c);
  out.status = dict.run();
  out.pivots = dict.pivots();
  if (out.status == SimplexStatus::Optimal) {
    out.y = dict.values(sf.num_cols);
    out.value = dict.z0();
  }
  return out;
}

}  // namespace monoap::detail
