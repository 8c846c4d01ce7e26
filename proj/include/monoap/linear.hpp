#pragma once

#include <span>
#include <utility>
#include <vector>

#include "monoap/rational.hpp"

namespace monoap {

using Point = std::vector<Rational>;

/// Affine expression sum_v coeff_v * x_v + constant, stored sparsely with
/// strictly increasing variable indices and no zero coefficients.
class LinearExpr {
 public:
  using Term = std::pair<int, Rational>;

  LinearExpr() = default;
  explicit LinearExpr(Rational constant) : constant_(std::move(constant)) {}

  static LinearExpr variable(int var, const Rational& coeff = 1);

  const std::vector<Term>& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }
  Rational coeff(int var) const;
  bool is_constant() const { return terms_.empty(); }
  /// Largest variable index referenced, or -1 for a constant.
  int max_var() const { return terms_.empty() ? -1 : terms_.back().first; }

  /// Throws std::out_of_range if x does not cover every referenced variable.
  Rational eval(std::span<const Rational> x) const;

  /// Replaces every x_v by images[v].
  LinearExpr substitute(std::span<const LinearExpr> images) const;

  LinearExpr& operator+=(const LinearExpr& other);
  LinearExpr& operator-=(const LinearExpr& other);
  LinearExpr& operator*=(const Rational& scale);

  friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
  friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }
  friend LinearExpr operator*(LinearExpr a, const Rational& s) { return a *= s; }
  friend LinearExpr operator*(const Rational& s, LinearExpr a) { return a *= s; }
  LinearExpr operator-() const { return *this * Rational(-1); }

  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;

 private:
  std::vector<Term> terms_;
  Rational constant_;
};

/// Quadratic polynomial x^T Q x + L.x + c over a fixed number of variables.
///
/// Q is held densely and kept symmetric: every write to (u, v) is mirrored to
/// (v, u), so the gradient is exactly 2 Q x + L.
class QuadraticForm {
 public:
  explicit QuadraticForm(int num_vars = 0);

  int num_vars() const { return n_; }
  const Rational& quad(int u, int v) const { return q_[std::size_t(u) * n_ + v]; }
  const Rational& linear(int v) const { return l_[v]; }
  const Rational& constant() const { return c_; }

  /// Adds scale * a * b. Both factors must only reference variables < num_vars().
  void add_product(const LinearExpr& a, const LinearExpr& b, const Rational& scale = 1);
  void add_linear(const LinearExpr& a, const Rational& scale = 1);
  /// Adds c to Q(u, v) and, off the diagonal, to Q(v, u).
  void add_quad_entry(int u, int v, const Rational& c);
  void add(const QuadraticForm& other, const Rational& scale = 1);

  /// Both throw std::out_of_range when x has fewer than num_vars() entries.
  Rational eval(std::span<const Rational> x) const;
  Point gradient(std::span<const Rational> x) const;

  /// Re-expresses the form after x_v := images[v]; the result has new_num_vars variables.
  QuadraticForm substitute(std::span<const LinearExpr> images, int new_num_vars) const;

  bool is_zero() const;
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  int n_;
  std::vector<Rational> q_;
  std::vector<Rational> l_;
  Rational c_;
};

}  // namespace monoap
