#include <numeric>
#include <random>

#include "doctest.h"
#include "monoap/errors.hpp"
#include "monoap/linear.hpp"
#include "monoap/linsolve.hpp"
#include "random_rationals.hpp"

using namespace monoap;
using monoap::testing::random_rational;

TEST_CASE("rational arithmetic examples") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(117, 548) * Rational(548) == Rational(117));
  // 28/548 reduces by gcd(28, 548) computed independently.
  long long g = std::gcd(28LL, 548LL);
  CHECK(g == 4);
  CHECK(Rational(28, 548) == Rational(28 / g, 548 / g));
  CHECK(Rational(28, 548).str() == "7/137");
  CHECK(Rational(5, -10).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("28/548") == Rational(7, 137));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
  for (const char* bad : {"", "-", "1/", "/2", "1.2.3", "abc", "1/-2", " 1", "1e5", ".5"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("overflow promotes to big and demotes back") {
  Rational big(std::numeric_limits<long long>::max());
  Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK((sq / big) == big);
  CHECK((sq / big).is_small());
  Rational tiny(1, std::numeric_limits<long long>::max());
  CHECK((tiny * tiny * big * big) == Rational(1));
  CHECK(Rational(INT64_MIN).str() == "-9223372036854775808");
  CHECK(Rational(INT64_MIN) < Rational(INT64_MIN + 1));
}

TEST_CASE("field axioms hold exactly on random inputs") {
  std::mt19937_64 rng(12345);
  for (int it = 0; it < 3000; ++it) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // Order agrees with GMP and with the sign of the difference.
    CHECK(((a < b) == (cmp(a.to_mpq(), b.to_mpq()) < 0)));
    CHECK(((a < b) == ((b - a).sign() > 0)));
    // Canonical form: reduced, positive denominator.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
    CHECK(g == 1);
    CHECK(a.denominator() > 0);
  }
}

TEST_CASE("linear expressions stay canonical") {
  auto x0 = LinearExpr::variable(0), x2 = LinearExpr::variable(2);
  LinearExpr e = x0 * Rational(2) - x2 + LinearExpr(Rational(1, 2));
  CHECK(e.terms().size() == 2);
  CHECK((e - e).terms().empty());
  CHECK((e + x2).terms().size() == 1);
  Point x{Rational(1), Rational(99), Rational(3)};
  CHECK(e.eval(x) == Rational(-1, 2));
  CHECK_THROWS_AS(e.eval(Point{Rational(1)}), std::out_of_range);
  // x0 -> 1 - y0, x2 -> y1
  std::vector<LinearExpr> img{LinearExpr(Rational(1)) - LinearExpr::variable(0), x0, LinearExpr::variable(1)};
  LinearExpr s = e.substitute(img);
  CHECK(s.eval(Point{Rational(0), Rational(3)}) == e.eval(Point{Rational(1), Rational(0), Rational(3)}));
}

TEST_CASE("solve_linear examples") {
  auto r1 = solve_linear({{1, 0}, {0, 1}}, {Rational(1, 2), Rational(1, 3)});
  CHECK(r1.kind == SolveKind::Unique);
  CHECK(r1.particular == Point{Rational(1, 2), Rational(1, 3)});

  auto r2 = solve_linear({{1, 1}}, {Rational(1)});
  CHECK(r2.kind == SolveKind::Affine);
  CHECK(r2.particular == Point{Rational(1), Rational(0)});
  REQUIRE(r2.nullspace.size() == 1);
  CHECK(r2.nullspace[0] == Point{Rational(1), Rational(-1)});

  auto r3 = solve_linear({{1, 1}, {1, 1}}, {Rational(1), Rational(2)});
  CHECK(r3.kind == SolveKind::Inconsistent);

  CHECK_THROWS_AS(solve_linear({{1, 1}, {1}}, {Rational(1), Rational(2)}), std::invalid_argument);
  CHECK_THROWS_AS(solve_linear({{1, 1}}, {Rational(1), Rational(2)}), std::invalid_argument);
}

TEST_CASE("solve_linear re-substitutes exactly") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), small(-3, 3);
  int affine = 0, unique = 0;
  for (int it = 0; it < 400; ++it) {
    int rows = dim(rng), cols = dim(rng);
    Matrix a(rows, Point(cols));
    for (auto& row : a)
      for (auto& e : row) e = (rng() % 3 == 0) ? Rational() : Rational(small(rng), 1 + rng() % 4);
    // Half the time build b from a known solution so the system is consistent.
    Point b(rows);
    if (it % 2 == 0) {
      Point x0(cols);
      for (auto& e : x0) e = random_rational(rng);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) b[r] += a[r][c] * x0[c];
    } else {
      for (auto& e : b) e = Rational(small(rng));
    }
    auto res = solve_linear(a, b);
    if (it % 2 == 0) CHECK(res.kind != SolveKind::Inconsistent);
    if (res.kind == SolveKind::Inconsistent) continue;
    (res.kind == SolveKind::Unique ? unique : affine)++;
    for (int r = 0; r < rows; ++r) {
      Rational acc;
      for (int c = 0; c < cols; ++c) acc += a[r][c] * res.particular[c];
      CHECK(acc == b[r]);
      for (const auto& v : res.nullspace) {
        Rational z;
        for (int c = 0; c < cols; ++c) z += a[r][c] * v[c];
        CHECK(z.is_zero());
      }
    }
  }
  CHECK(unique > 0);
  CHECK(affine > 0);
}

TEST_CASE("quadratic form evaluation and gradient examples") {
  QuadraticForm q(1);
  q.add_product(LinearExpr::variable(0), LinearExpr::variable(0));
  CHECK(q.eval(Point{Rational(1, 2)}) == Rational(1, 4));
  CHECK(q.gradient(Point{Rational(1, 2)}) == Point{Rational(1)});

  QuadraticForm a(2);
  a.add_linear(LinearExpr::variable(0, 2) + LinearExpr::variable(1, 3) + LinearExpr(Rational(5)));
  CHECK(a.eval(Point{Rational(1), Rational(1)}) == Rational(10));
  CHECK(a.gradient(Point{Rational(1), Rational(1)}) == Point{Rational(2), Rational(3)});
  CHECK_THROWS_AS(a.eval(Point{Rational(1)}), std::out_of_range);
}

namespace {

struct ProductTerm {
  LinearExpr a, b;
  Rational scale;
};

LinearExpr random_linear(std::mt19937_64& rng, int n) {
  LinearExpr e(Rational(long(rng() % 7) - 3, 1 + long(rng() % 3)));
  for (int v = 0; v < n; ++v)
    if (rng() % 2) e += LinearExpr::variable(v, Rational(long(rng() % 9) - 4, 1 + long(rng() % 4)));
  return e;
}

}  // namespace

TEST_CASE("gradient matches product-rule differentiation and exact central differences") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + int(rng() % 5);
    std::vector<ProductTerm> terms;
    QuadraticForm q(n);
    for (int t = 0; t < 4; ++t) {
      ProductTerm pt{random_linear(rng, n), random_linear(rng, n), Rational(long(rng() % 5) - 2, 2)};
      q.add_product(pt.a, pt.b, pt.scale);
      terms.push_back(pt);
    }
    Point x(n);
    for (auto& e : x) e = Rational(long(rng() % 21) - 10, 1 + long(rng() % 6));

    // Independent value and derivative straight from the factors.
    Rational value;
    Point deriv(n);
    for (const auto& pt : terms) {
      Rational av = pt.a.eval(x), bv = pt.b.eval(x);
      value += pt.scale * av * bv;
      for (int v = 0; v < n; ++v) deriv[v] += pt.scale * (pt.a.coeff(v) * bv + pt.b.coeff(v) * av);
    }
    CHECK(q.eval(x) == value);
    auto g = q.gradient(x);
    CHECK(g == deriv);

    // Central differences are exact for quadratics.
    Rational h(1, 3 + long(rng() % 50));
    for (int v = 0; v < n; ++v) {
      Point xp = x, xm = x;
      xp[v] += h;
      xm[v] -= h;
      CHECK((q.eval(xp) - q.eval(xm)) / (h + h) == g[v]);
    }
    // Mirror invariant.
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) CHECK(q.quad(u, v) == q.quad(v, u));

    // Substitution commutes with evaluation.
    std::vector<LinearExpr> img;
    for (int v = 0; v < n; ++v) img.push_back(random_linear(rng, 2));
    auto s = q.substitute(img, 2);
    Point y{Rational(1, 3), Rational(-2, 7)};
    Point xy(n);
    for (int v = 0; v < n; ++v) xy[v] = img[v].eval(y);
    CHECK(s.eval(y) == q.eval(xy));
  }
}
