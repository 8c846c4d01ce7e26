#include "monoap/linear.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace monoap {
namespace {

void require_covered(std::span<const Rational> x, int max_var) {
  if (max_var >= static_cast<int>(x.size()))
    throw std::out_of_range("point has " + std::to_string(x.size()) + " coordinates, variable x" +
                            std::to_string(max_var) + " is missing");
}

}  // namespace

LinearExpr LinearExpr::variable(int var, const Rational& coeff) {
  LinearExpr e;
  if (!coeff.is_zero()) e.terms_.emplace_back(var, coeff);
  return e;
}

Rational LinearExpr::coeff(int var) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), var,
                             [](const Term& t, int v) { return t.first < v; });
  return (it != terms_.end() && it->first == var) ? it->second : Rational();
}

Rational LinearExpr::eval(std::span<const Rational> x) const {
  require_covered(x, max_var());
  Rational acc = constant_;
  for (const auto& [v, c] : terms_) acc += c * x[v];
  return acc;
}

LinearExpr LinearExpr::substitute(std::span<const LinearExpr> images) const {
  if (max_var() >= static_cast<int>(images.size()))
    throw std::out_of_range("substitution does not cover x" + std::to_string(max_var()));
  LinearExpr out(constant_);
  for (const auto& [v, c] : terms_) out += images[v] * c;
  return out;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& other) {
  constant_ += other.constant_;
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& other) { return *this += -other; }

LinearExpr& LinearExpr::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  for (auto& t : terms_) t.second *= scale;
  constant_ *= scale;
  return *this;
}

QuadraticForm::QuadraticForm(int num_vars)
    : n_(num_vars), q_(std::size_t(num_vars) * num_vars), l_(std::size_t(num_vars)) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

void QuadraticForm::add_quad_entry(int u, int v, const Rational& c) {
  q_[std::size_t(u) * n_ + v] += c;
  if (u != v) q_[std::size_t(v) * n_ + u] += c;
}

void QuadraticForm::add_product(const LinearExpr& a, const LinearExpr& b, const Rational& scale) {
  if (scale.is_zero()) return;
  if (a.max_var() >= n_ || b.max_var() >= n_)
    throw std::out_of_range("factor references a variable outside the form");
  // scale * a_u * b_v * x_u x_v, symmetrised: each unordered pair gets half on both sides.
  Rational half_scale = scale * Rational(1, 2);
  for (const auto& [u, au] : a.terms()) {
    Rational su = half_scale * au;
    for (const auto& [v, bv] : b.terms()) {
      Rational c = su * bv;
      if (u == v) {
        q_[std::size_t(u) * n_ + u] += c + c;
      } else {
        add_quad_entry(u, v, c);
      }
    }
  }
  if (!b.constant().is_zero()) {
    Rational sb = scale * b.constant();
    for (const auto& [u, au] : a.terms()) l_[u] += sb * au;
  }
  if (!a.constant().is_zero()) {
    Rational sa = scale * a.constant();
    for (const auto& [v, bv] : b.terms()) l_[v] += sa * bv;
  }
  c_ += scale * a.constant() * b.constant();
}

void QuadraticForm::add_linear(const LinearExpr& a, const Rational& scale) {
  if (a.max_var() >= n_) throw std::out_of_range("term references a variable outside the form");
  for (const auto& [v, c] : a.terms()) l_[v] += scale * c;
  c_ += scale * a.constant();
}

void QuadraticForm::add(const QuadraticForm& other, const Rational& scale) {
  if (other.n_ != n_) throw std::invalid_argument("quadratic forms over different variable counts");
  for (std::size_t i = 0; i < q_.size(); ++i)
    if (!other.q_[i].is_zero()) q_[i] += scale * other.q_[i];
  for (std::size_t i = 0; i < l_.size(); ++i)
    if (!other.l_[i].is_zero()) l_[i] += scale * other.l_[i];
  c_ += scale * other.c_;
}

Rational QuadraticForm::eval(std::span<const Rational> x) const {
  require_covered(x, n_ - 1);
  Rational acc = c_;
  for (int u = 0; u < n_; ++u) {
    if (x[u].is_zero()) continue;
    Rational row = l_[u];
    for (int v = 0; v < n_; ++v) {
      const Rational& q = quad(u, v);
      if (!q.is_zero()) row += q * x[v];
    }
    acc += row * x[u];
  }
  return acc;
}

Point QuadraticForm::gradient(std::span<const Rational> x) const {
  require_covered(x, n_ - 1);
  Point g(l_.begin(), l_.end());
  for (int u = 0; u < n_; ++u) {
    Rational row;
    for (int v = 0; v < n_; ++v) {
      const Rational& q = quad(u, v);
      if (!q.is_zero()) row += q * x[v];
    }
    g[u] += row + row;
  }
  return g;
}

QuadraticForm QuadraticForm::substitute(std::span<const LinearExpr> images, int new_num_vars) const {
  if (static_cast<int>(images.size()) < n_) throw std::out_of_range("substitution does not cover every variable");
  QuadraticForm out(new_num_vars);
  for (int u = 0; u < n_; ++u) {
    const Rational& d = quad(u, u);
    if (!d.is_zero()) out.add_product(images[u], images[u], d);
    for (int v = u + 1; v < n_; ++v) {
      const Rational& q = quad(u, v);
      if (!q.is_zero()) out.add_product(images[u], images[v], q + q);
    }
    if (!l_[u].is_zero()) out.add_linear(images[u], l_[u]);
  }
  out.c_ += c_;
  return out;
}

bool QuadraticForm::is_zero() const {
  auto z = [](const Rational& r) { return r.is_zero(); };
  return c_.is_zero() && std::all_of(q_.begin(), q_.end(), z) && std::all_of(l_.begin(), l_.end(), z);
}

}  // namespace monoap
