#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "monoap/diagram.hpp"

namespace monoap::testing {

// The 12-block antisymmetric coloring with block lengths 28,6,28,37,59,116,116,59,37,28,6,28 (/548).
inline Endpoints twelve_block_endpoints() {
  const long long cuts[] = {0, 28, 34, 62, 99, 158, 274, 390, 449, 486, 514, 520, 548};
  Point x;
  for (long long c : cuts) x.push_back(Rational(c, 548));
  return Endpoints(std::move(x));
}

// Sorted values in (0, 1) with the given denominator; duplicates allowed
// unless distinct is set.
inline Point random_cuts(std::mt19937_64& rng, int count, long long den, bool distinct) {
  std::uniform_int_distribution<long long> d(1, den - 1);
  std::vector<long long> v;
  std::set<long long> seen;
  while (static_cast<int>(v.size()) < count) {
    long long a = d(rng);
    if (distinct && !seen.insert(a).second) continue;
    v.push_back(a);
  }
  std::sort(v.begin(), v.end());
  Point out;
  for (long long a : v) out.push_back(Rational(a, den));
  return out;
}

inline Endpoints random_monotone(std::mt19937_64& rng, int n, long long den, bool distinct = false) {
  Point x{Rational(0)};
  for (auto& c : random_cuts(rng, n - 1, den, distinct)) x.push_back(c);
  x.push_back(Rational(1));
  return Endpoints(std::move(x));
}

// Strictly increasing antisymmetric endpoints; free values in (0, 1/2).
inline Endpoints random_antisymmetric(std::mt19937_64& rng, int n, long long den = 100003) {
  Point free;
  for (auto& c : random_cuts(rng, num_free_vars(n), den, true)) free.push_back(c * Rational(1, 2));
  if (n == 2) return Endpoints(Point{Rational(0), Rational(1, 2), Rational(1)});
  return Endpoints::from_free(n, free);
}

}  // namespace monoap::testing
