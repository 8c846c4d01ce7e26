#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "float_oracle.hpp"
#include "monoap/errors.hpp"
#include "monoap/optimizer.hpp"

using namespace monoap;
using namespace monoap::testing;

namespace {

LinearExpr X(int v) { return LinearExpr::variable(v); }

}  // namespace

TEST_CASE("critical point examples") {
  QuadraticForm q(1);
  q.add_product(X(0) - LinearExpr(Rational(1, 4)), X(0) - LinearExpr(Rational(1, 4)));
  q.add_linear(LinearExpr(Rational(1, 5)));
  std::vector<Constraint> region{Constraint::less_equal(LinearExpr(), X(0)),
                                 Constraint::less_equal(X(0), LinearExpr(Rational(1, 2)))};
  auto c = critical_points(q, region);
  REQUIRE(c);
  CHECK(c->point == Point{Rational(1, 4)});
  CHECK(c->value == Rational(1, 5));
  CHECK_FALSE(c->affine);

  // Strict rows are tested in closure.
  std::vector<Constraint> edge{Constraint::less(X(0), LinearExpr(Rational(1, 4)))};
  CHECK(critical_points(q, edge));
  std::vector<Constraint> outside{Constraint::less(X(0), LinearExpr(Rational(1, 5)))};
  CHECK_FALSE(critical_points(q, outside));

  QuadraticForm lin(1);
  lin.add_linear(X(0) + LinearExpr(Rational(1)));
  CHECK_FALSE(critical_points(lin, region));

  QuadraticForm constant(0);
  constant.add_linear(LinearExpr(Rational(1, 2)));
  auto k = critical_points(constant, {});
  REQUIRE(k);
  CHECK(k->value == Rational(1, 2));
  CHECK(k->point.empty());
}

TEST_CASE("affine critical sets") {
  // (x0 + x1 - 1/2)^2 + 1/7: critical along x0 + x1 = 1/2.
  QuadraticForm q(2);
  auto d = X(0) + X(1) - LinearExpr(Rational(1, 2));
  q.add_product(d, d);
  q.add_linear(LinearExpr(Rational(1, 7)));
  std::vector<Constraint> region{Constraint::less_equal(X(0), X(1))};
  auto c = critical_points(q, region);
  REQUIRE(c);
  CHECK(c->affine);
  CHECK(c->value == Rational(1, 7));
  CHECK(c->point[0] + c->point[1] == Rational(1, 2));
  CHECK(c->point[0] <= c->point[1]);
  // The critical line misses this region.
  std::vector<Constraint> away{Constraint::less_equal(LinearExpr(Rational(3, 4)), X(0) + X(1))};
  CHECK_FALSE(critical_points(q, away));
}

TEST_CASE("coloring cuts merge empty blocks") {
  Point x{Rational(0), Rational(1, 4), Rational(1, 4), Rational(1, 2), Rational(1)};
  CHECK(coloring_cuts(x) == Point{Rational(1, 2)});
  CHECK(coloring_cuts({Rational(0), Rational(1)}).empty());
  CHECK(coloring_cuts({Rational(0), Rational(0), Rational(1, 3), Rational(1)}) == Point{Rational(1, 3)});
}

TEST_CASE("global minimum for tiny n") {
  auto r0 = global_minimize(0);
  CHECK(r0.global.value == Rational(1));
  CHECK(r0.global.endpoints == Point{Rational(0), Rational(1)});

  auto r2 = global_minimize(2);
  CHECK(r2.global.value == Rational(1, 2));
  CHECK(r2.global.endpoints == Point{Rational(0), Rational(1, 2), Rational(1)});
  CHECK(r2.unique);
  CHECK_THROWS_AS(global_minimize(3), std::invalid_argument);
  CHECK_THROWS_AS(global_minimize(14), std::invalid_argument);
}

TEST_CASE("global minimum agrees with a floating-point descent oracle") {
  std::mt19937_64 rng(1);
  auto rep = global_minimize(6);
  REQUIRE(rep.per_n.size() == 4);
  double oracle = 1;
  for (int n = 0; n <= 6; n += 2) {
    if (n > 0) oracle = std::min(oracle, float_oracle_min(n, rng));
    const auto& s = rep.per_n[std::size_t(n / 2)];
    CHECK(std::abs(s.cumulative_minimum.to_double() - oracle) < 1e-6);
  }
  for (std::size_t s = 1; s < rep.per_n.size(); ++s)
    CHECK(rep.per_n[s].cumulative_minimum <= rep.per_n[s - 1].cumulative_minimum);
  for (const auto& m : rep.minimizers) {
    CHECK(m.value == rep.global.value);
    CHECK(evaluate_f(Endpoints(m.endpoints)) == m.value);
  }
}

TEST_CASE("random feasible points never beat the reported minimum") {
  auto rep = global_minimize(8);
  std::mt19937_64 rng(2);
  for (int s = 0; s < 1000; ++s) {
    const int n = 2 * (1 + int(rng() % 4));
    auto e = testing::random_antisymmetric(rng, n, 10007);
    CHECK(evaluate_f(e) >= rep.global.value);
  }
  // Every stratum's cumulative minimum is attained by a stored record.
  for (const auto& s : rep.per_n)
    if (s.best) CHECK(s.best->value >= s.cumulative_minimum);
}

TEST_CASE("certify_point") {
  auto e = testing::twelve_block_endpoints();
  auto c = certify_point(e);
  CHECK(c.value == Rational(117, 548));
  CHECK(c.is_critical);
  CHECK(c.gradient.size() == 5);
  for (const auto& g : c.gradient) CHECK(g.is_zero());

  auto half = certify_point(Endpoints(Point{Rational(0), Rational(1, 2), Rational(1)}));
  CHECK(half.value == Rational(1, 2));
  CHECK(half.gradient.empty());
  CHECK(half.is_critical);

  Point moved = e.x;
  moved[1] = Rational(29, 548);
  moved[11] = Rational(519, 548);
  auto p = certify_point(Endpoints(moved));
  CHECK_FALSE(p.is_critical);
  CHECK(p.value > Rational(117, 548));

  CHECK_THROWS_AS(certify_point(Endpoints(Point{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                                Rational(1)})),
                  TieError);
}

TEST_CASE("report serialization is stable") {
  auto rep = global_minimize(4);
  auto a = to_json(rep).dump(2);
  auto b = to_json(global_minimize(4)).dump(2);
  CHECK(a == b);
  auto j = to_json(rep);
  std::vector<std::string> keys;
  for (auto it = j["global"].begin(); it != j["global"].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "config_index", "config_line", "config_hash", "point", "endpoints",
                                         "value"});
  CHECK(j["global"]["value"].get<std::string>() == rep.global.value.str());
  CHECK_FALSE(j["per_n"][0].contains("seconds"));
  CHECK(to_json(rep, true)["per_n"][0].contains("seconds"));
}
