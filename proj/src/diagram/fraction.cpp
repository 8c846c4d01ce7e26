#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "monoap/diagram.hpp"
#include "monoap/errors.hpp"

namespace monoap {

Endpoints::Endpoints(Point pts, bool allow_degenerate) : n(static_cast<int>(pts.size()) - 1), x(std::move(pts)) {
  if (n < 1) throw std::invalid_argument("endpoints need at least x_0 and x_n");
  if (x.front() != Rational(0) || x.back() != Rational(1)) throw std::invalid_argument("endpoints must start at 0 and end at 1");
  for (int s = 0; s < n; ++s) {
    if (x[s + 1] < x[s]) throw std::invalid_argument("endpoints must be nondecreasing");
    if (!allow_degenerate && x[s + 1] == x[s]) throw std::invalid_argument("endpoints must be strictly increasing");
  }
  antisymmetric = true;
  for (int s = 0; s <= n && antisymmetric; ++s) antisymmetric = x[s] + x[n - s] == Rational(1);
}

bool Endpoints::strictly_monotone() const {
  for (int s = 0; s < n; ++s)
    if (!(x[s] < x[s + 1])) return false;
  return true;
}

Point Endpoints::free_variables() const {
  if (!antisymmetric || n % 2 != 0) throw std::invalid_argument("free variables need antisymmetric endpoints");
  return Point(x.begin() + 1, x.begin() + 1 + num_free_vars(n));
}

Endpoints Endpoints::from_free(int n, const Point& free) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("from_free needs an even n >= 2");
  if (static_cast<int>(free.size()) != num_free_vars(n)) throw std::invalid_argument("wrong number of free variables");
  auto images = antisymmetric_images(n);
  Point x;
  for (const auto& e : images) x.push_back(e.eval(free));
  return Endpoints(std::move(x));
}

int num_free_vars(int n) { return n <= 2 ? 0 : n / 2 - 1; }

std::vector<LinearExpr> antisymmetric_images(int n) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("antisymmetry needs an even n");
  std::vector<LinearExpr> img;
  for (int m = 0; m <= n; ++m) {
    if (m == 0) img.emplace_back(Rational(0));
    else if (m == n) img.emplace_back(Rational(1));
    else if (2 * m == n) img.emplace_back(Rational(1, 2));
    else if (2 * m < n) img.push_back(LinearExpr::variable(m - 1));
    else img.push_back(LinearExpr(Rational(1)) - LinearExpr::variable(n - m - 1));
  }
  return img;
}

namespace {

// Every reduced region form for one n, scaled to a common integer
// denominator so a configuration's form is a sum of small integer vectors.
struct FormTable {
  int n = 0;
  int m = 0;            // free variables
  long long denom = 1;
  std::size_t width = 0;  // m*m quad + m linear + 1 constant
  std::vector<std::vector<long long>> forms;  // [triple * 21 + case]

  std::size_t triple(int i, int j, int k) const { return (std::size_t(i) * n + j) * n + k; }
};

std::shared_ptr<const FormTable> build_table(int n) {
  auto t = std::make_shared<FormTable>();
  t->n = n;
  t->m = num_free_vars(n);
  t->width = std::size_t(t->m) * t->m + t->m + 1;
  t->forms.resize(std::size_t(n) * n * n * 21);
  const auto images = antisymmetric_images(n);

  std::vector<std::pair<std::size_t, QuadraticForm>> exact;
  mpz_class lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i % 2; j < n; j += 2)
      for (int k = i % 2; k < n; k += 2)
        for (int c = 1; c <= 18; ++c) {
          auto q = region_area_form({c}, i, j, k, n).substitute(images, t->m);
          auto note = [&](const Rational& r) { mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.denominator().get_mpz_t()); };
          for (int u = 0; u < t->m; ++u) {
            for (int v = 0; v < t->m; ++v) note(q.quad(u, v));
            note(q.linear(u));
          }
          note(q.constant());
          exact.emplace_back(t->triple(i, j, k) * 21 + c, std::move(q));
        }
  if (!lcm.fits_slong_p() || lcm > 1 << 20) throw InternalError("region form denominators unexpectedly large");
  t->denom = lcm.get_si();

  const Rational d(t->denom);
  auto scaled = [&](const Rational& r) {
    Rational s = r * d;
    if (!s.is_integer() || !s.numerator().fits_slong_p()) throw InternalError("region form does not scale to integers");
    return static_cast<long long>(s.numerator().get_si());
  };
  for (auto& [slot, q] : exact) {
    std::vector<long long> v;
    v.reserve(t->width);
    for (int u = 0; u < t->m; ++u)
      for (int w = 0; w < t->m; ++w) v.push_back(scaled(q.quad(u, w)));
    for (int u = 0; u < t->m; ++u) v.push_back(scaled(q.linear(u)));
    v.push_back(scaled(q.constant()));
    t->forms[slot] = std::move(v);
  }
  return t;
}

std::shared_ptr<const FormTable> table_for(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FormTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_table(n);
  return slot;
}

}  // namespace

QuadraticForm mono_fraction_form(const Configuration& cfg) {
  if (!cfg.complete()) throw std::invalid_argument("mono_fraction_form needs a complete configuration");
  const int n = cfg.n();
  if (n == 0) {
    QuadraticForm one(0);
    one.add_linear(LinearExpr(Rational(1)));
    return one;
  }
  auto t = table_for(n);
  std::vector<long long> acc(t->width, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i % 2; j < n; j += 2)
      for (int k = i % 2; k < n; k += 2) {
        const int c = classify_region(i, j, k, cfg).id;
        if (c > 18) continue;
        const auto& f = t->forms[t->triple(i, j, k) * 21 + c];
        for (std::size_t s = 0; s < acc.size(); ++s) acc[s] += f[s];
      }

  const int m = t->m;
  QuadraticForm q(m);
  for (int u = 0; u < m; ++u)
    for (int v = u; v < m; ++v) {
      const long long a = acc[std::size_t(u) * m + v];
      if (a != 0) q.add_quad_entry(u, v, Rational(a, t->denom));
    }
  for (int u = 0; u < m; ++u)
    if (long long a = acc[std::size_t(m) * m + u]; a != 0) q.add_linear(LinearExpr::variable(u, Rational(a, t->denom)));
  q.add_linear(LinearExpr(Rational(acc.back(), t->denom)));
  return q;
}

namespace {

Rational sum_regions(const Endpoints& e, bool parity_only) {
  const int n = e.n;
  Rational total;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (parity_only && (i % 2 != j % 2 || j % 2 != k % 2)) continue;
        auto c = classify_region(i, j, k, e.x);
        if (c.id > 18) continue;
        total += region_area(c, i, j, k, e.x);
      }
  return total;
}

}  // namespace

Rational evaluate_f(const Endpoints& e) { return sum_regions(e, true); }

Rational total_area_check(const Endpoints& e) { return sum_regions(e, false); }

Configuration derive_configuration(const Endpoints& e) {
  if (e.n % 2 != 0 || !e.antisymmetric) throw std::invalid_argument("derive_configuration needs antisymmetric endpoints");
  if (!e.strictly_monotone()) throw std::invalid_argument("derive_configuration needs strictly increasing endpoints");
  Configuration cfg(e.n);
  for (auto [i, j] : Configuration::pairs(e.n)) {
    const Rational s = e.x[i] + e.x[j];
    int found = -1;
    for (int k = i; k < j; ++k) {
      const Rational lo = e.x[k] + e.x[k];
      if (s == lo) throw TieError(i, j, k);
      if (lo < s && s < e.x[k + 1] + e.x[k + 1]) found = k;
    }
    if (found < 0) throw InternalError("pair sum outside its index range");
    cfg.set(i, j, found);
  }
  return cfg;
}

std::vector<Constraint> chain_constraints(int n, bool closed) {
  const int m = num_free_vars(n);
  std::vector<Constraint> rows;
  if (m == 0) return rows;
  auto rel = closed ? Relation::LessEqual : Relation::Less;
  auto y = [](int v) { return LinearExpr::variable(v); };
  rows.push_back({-y(0), rel});
  for (int v = 0; v + 1 < m; ++v) rows.push_back({y(v) - y(v + 1), rel});
  rows.push_back({y(m - 1) - LinearExpr(Rational(1, 2)), rel});
  return rows;
}

std::vector<Constraint> placement_constraints(int n, int i, int j, int k, bool closed) {
  static thread_local std::map<int, std::vector<LinearExpr>> image_cache;
  auto it = image_cache.find(n);
  if (it == image_cache.end()) it = image_cache.emplace(n, antisymmetric_images(n)).first;
  const auto& img = it->second;
  auto rel = closed ? Relation::LessEqual : Relation::Less;
  const Rational two(2);
  std::vector<Constraint> rows;
  // 2x_k < x_i + x_j is implied by the chain when k == i; likewise the upper side when k+1 == j.
  if (k != i) rows.push_back({img[k] * two - img[i] - img[j], rel});
  if (k + 1 != j) rows.push_back({img[i] + img[j] - img[k + 1] * two, rel});
  std::vector<Constraint> kept;
  for (auto& r : rows) {
    if (r.lhs.is_constant() && r.satisfied_by(Point{})) continue;
    kept.push_back(std::move(r));
  }
  return kept;
}

std::vector<Constraint> chamber_constraints(const Configuration& cfg, bool closed) {
  auto rows = chain_constraints(cfg.n(), closed);
  for (auto [i, j] : Configuration::pairs(cfg.n())) {
    auto k = cfg.kappa(i, j);
    if (!k) continue;
    for (auto& r : placement_constraints(cfg.n(), i, j, *k, closed)) {
      bool dup = false;
      for (const auto& have : rows) dup = dup || have == r;
      if (!dup) rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace monoap
