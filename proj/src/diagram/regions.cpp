#include <array>

#include "area_recipe.hpp"
#include "monoap/diagram.hpp"
#include "monoap/errors.hpp"

namespace monoap {
namespace {

// Corner order: L = (i, j), A = (i, j+1), B = (i+1, j), U = (i+1, j+1).
// below[c] means corner sum <= threshold.
using Below = std::array<bool, 4>;
enum Corner { L = 0, A = 1, B = 2, U = 3 };

bool downward_closed(const Below& b) {
  if (b[U] && !(b[A] && b[B])) return false;
  if ((b[A] || b[B]) && !b[L]) return false;
  return true;
}

// 0..4 corners below; for exactly two, 'B' or 'A' says which middle corner.
struct Slot {
  int count;
  char side;
};

Slot slot_of(const Below& b) {
  int c = b[L] + b[A] + b[B] + b[U];
  char side = ' ';
  if (c == 2) side = b[B] ? 'B' : 'A';
  return {c, side};
}

RegionCase case_from_pattern(const Below& lo, const Below& hi, int i, int j, int k) {
  auto fail = [&]() -> RegionCase {
    throw InternalError("inconsistent comparisons for region (" + std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + ")");
  };
  if (!downward_closed(lo) || !downward_closed(hi)) return fail();
  for (int c = 0; c < 4; ++c)
    if (lo[c] && !hi[c]) return fail();
  const Slot a = slot_of(lo), b = slot_of(hi);
  switch (a.count) {
    case 0:
      switch (b.count) {
        case 0: return {19};
        case 1: return {17};
        case 2: return {b.side == 'B' ? 11 : 14};
        case 3: return {6};
        case 4: return {1};
      }
      break;
    case 1:
      switch (b.count) {
        case 1: return {18};
        case 2: return {b.side == 'B' ? 12 : 15};
        case 3: return {7};
        case 4: return {2};
      }
      break;
    case 2:
      switch (b.count) {
        case 2:
          if (a.side != b.side) return fail();
          return {a.side == 'B' ? 13 : 16};
        case 3: return {a.side == 'B' ? 8 : 9};
        case 4: return {a.side == 'B' ? 3 : 4};
      }
      break;
    case 3:
      if (b.count == 3) return {10};
      if (b.count == 4) return {5};
      break;
    case 4: return {20};
  }
  return fail();
}

void check_strips(int i, int j, int k, int n) {
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) throw std::out_of_range("strip index outside 0..n-1");
}

}  // namespace

RegionCase classify_region(int i, int j, int k, const Configuration& cfg) {
  check_strips(i, j, k, cfg.n());
  const std::array<std::pair<int, int>, 4> corners{{{i, j}, {i, j + 1}, {i + 1, j}, {i + 1, j + 1}}};
  Below lo{}, hi{};
  for (int c = 0; c < 4; ++c) {
    lo[c] = cfg.sum_at_most_double(corners[c].first, corners[c].second, k);
    hi[c] = cfg.sum_at_most_double(corners[c].first, corners[c].second, k + 1);
  }
  return case_from_pattern(lo, hi, i, j, k);
}

RegionCase classify_region(int i, int j, int k, std::span<const Rational> x) {
  check_strips(i, j, k, static_cast<int>(x.size()) - 1);
  const std::array<Rational, 4> sums{x[i] + x[j], x[i] + x[j + 1], x[i + 1] + x[j], x[i + 1] + x[j + 1]};
  const Rational lo_t = x[k] + x[k], hi_t = x[k + 1] + x[k + 1];
  Below lo{}, hi{};
  for (int c = 0; c < 4; ++c) {
    lo[c] = sums[c] <= lo_t;
    hi[c] = sums[c] <= hi_t;
  }
  return case_from_pattern(lo, hi, i, j, k);
}

QuadraticForm region_area_form(RegionCase c, int i, int j, int k, int n) {
  check_strips(i, j, k, n);
  QuadraticForm q(n + 1);
  auto v = [](int m) { return LinearExpr::variable(m); };
  detail::area_recipe<LinearExpr>(c.id, v(i), v(i + 1), v(j), v(j + 1), v(k), v(k + 1),
                                  [&](const Rational& s, const LinearExpr& a, const LinearExpr& b) {
                                    q.add_product(a, b, s);
                                  });
  return q;
}

Rational region_area(RegionCase c, int i, int j, int k, std::span<const Rational> x) {
  check_strips(i, j, k, static_cast<int>(x.size()) - 1);
  Rational acc;
  detail::area_recipe<Rational>(c.id, x[i], x[i + 1], x[j], x[j + 1], x[k], x[k + 1],
                                [&](const Rational& s, const Rational& a, const Rational& b) { acc += s * a * b; });
  return acc;
}

}  // namespace monoap
