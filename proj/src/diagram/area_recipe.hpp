#pragma once

#include "monoap/errors.hpp"
#include "monoap/rational.hpp"

namespace monoap::detail {

// The twenty region areas, written once for both exact values (T = Rational)
// and symbolic forms (T = LinearExpr). emit(scale, a, b) receives scale*a*b.
template <class T, class Emit>
void area_recipe(int id, const T& i0, const T& i1, const T& j0, const T& j1, const T& k0, const T& k1, Emit&& emit) {
  const Rational two(2), half(1, 2), neg_half(-1, 2), one(1);
  auto w = [&] { return i1 - i0; };
  auto h = [&] { return j1 - j0; };
  auto d_lo_low = [&] { return k0 * two - i0 - j0; };   // 2x_k - x_i - x_j
  auto d_lo_high = [&] { return k0 * two - i1 - j1; };  // 2x_k - x_{i+1} - x_{j+1}
  auto d_hi_low = [&] { return k1 * two - i0 - j0; };
  auto d_hi_high = [&] { return k1 * two - i1 - j1; };
  auto c3 = [&] { return j1 + i0 * half + i1 * half - k0 * two; };
  auto c4 = [&] { return i1 + j0 * half + j1 * half - k0 * two; };
  auto c11 = [&] { return k1 * two - j0 - i0 * half - i1 * half; };
  auto c14 = [&] { return k1 * two - j0 * half - j1 * half - i0; };
  auto band = [&] { return k1 * two - k0 * two; };
  auto sq = [&](const T& d, const Rational& s) { emit(s, d, d); };

  switch (id) {
    case 1: emit(one, w(), h()); break;
    case 2: emit(one, w(), h()); sq(d_lo_low(), neg_half); break;
    case 3: emit(one, w(), c3()); break;
    case 4: emit(one, h(), c4()); break;
    case 5: sq(d_lo_high(), half); break;
    case 6: emit(one, w(), h()); sq(d_hi_high(), neg_half); break;
    case 7: emit(one, w(), h()); sq(d_lo_low(), neg_half); sq(d_hi_high(), neg_half); break;
    case 8: emit(one, w(), c3()); sq(d_hi_high(), neg_half); break;
    case 9: emit(one, h(), c4()); sq(d_hi_high(), neg_half); break;
    case 10: sq(d_lo_high(), half); sq(d_hi_high(), neg_half); break;
    case 11: emit(one, w(), c11()); break;
    case 12: emit(one, w(), c11()); sq(d_lo_low(), neg_half); break;
    case 13: emit(one, w(), band()); break;
    case 14: emit(one, h(), c14()); break;
    case 15: emit(one, h(), c14()); sq(d_lo_low(), neg_half); break;
    case 16: emit(one, h(), band()); break;
    case 17: sq(d_hi_low(), half); break;
    case 18: sq(d_hi_low(), half); sq(d_lo_low(), neg_half); break;
    case 19:
    case 20: break;
    default: throw InternalError("region case out of range: " + std::to_string(id));
  }
}

}  // namespace monoap::detail
