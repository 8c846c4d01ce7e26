#include <stdexcept>

#include "monoap/discrete.hpp"
#include "monoap/errors.hpp"

namespace monoap {

DiscreteColoring DiscreteColoring::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty coloring");
  DiscreteColoring c;
  c.colors.reserve(text.size());
  for (char ch : text) {
    if (ch == 'R') c.colors.push_back(0);
    else if (ch == 'B') c.colors.push_back(1);
    else throw ParseError(std::string("coloring may only contain R and B, got '") + ch + "'");
  }
  return c;
}

std::string DiscreteColoring::str() const {
  std::string s;
  for (auto c : colors) s += c ? 'B' : 'R';
  return s;
}

int DiscreteColoring::block_count() const {
  if (colors.empty()) return 0;
  int b = 1;
  for (std::size_t i = 1; i < colors.size(); ++i) b += colors[i] != colors[i - 1];
  return b;
}

DiscreteColoring DiscreteColoring::swapped() const {
  DiscreteColoring s = *this;
  for (auto& c : s.colors) c ^= 1;
  return s;
}

Endpoints DiscreteColoring::bead_endpoints() const {
  if (colors.empty()) throw std::invalid_argument("empty coloring");
  Point x{Rational(0)};
  for (std::size_t i = 1; i < colors.size(); ++i)
    if (colors[i] != colors[i - 1]) x.push_back(Rational(static_cast<long long>(i), size()));
  x.push_back(Rational(1));
  return Endpoints(std::move(x));
}

std::int64_t count_ap3(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  const std::int64_t hi = (N + 1) / 2, lo = N / 2;
  return hi * hi + lo * lo;
}

std::int64_t count_offby1(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  return 4 * ((N + 1) / 2) * (N / 2);
}

namespace {

// Ordered endpoint pairs (t1, t3), 0-based, split by parity of t1 + t3:
// even sums have one middle, odd sums the two middles (t1+t3 -+ 1)/2.
template <bool Odd>
std::int64_t scan(const std::vector<std::uint8_t>& c) {
  const std::int64_t n = static_cast<std::int64_t>(c.size());
  std::int64_t total = 0;
  for (std::int64_t a = 0; a < n; ++a) {
    const auto ca = c[std::size_t(a)];
    for (std::int64_t b = Odd ? ((a + 1) % 2) : (a % 2); b < n; b += 2) {
      if (c[std::size_t(b)] != ca) continue;
      const std::int64_t s = a + b;
      if constexpr (Odd) {
        total += (c[std::size_t((s - 1) / 2)] == ca) + (c[std::size_t((s + 1) / 2)] == ca);
      } else {
        total += c[std::size_t(s / 2)] == ca;
      }
    }
  }
  return total;
}

}  // namespace

std::int64_t count_mono_ap3(const DiscreteColoring& c) { return scan<false>(c.colors); }
std::int64_t count_mono_offby1(const DiscreteColoring& c) { return scan<true>(c.colors); }

APCounts count_all(const DiscreteColoring& c) {
  APCounts a;
  a.N = c.size();
  a.ap3_total = count_ap3(a.N);
  a.offby1_total = count_offby1(a.N);
  a.m3 = count_mono_ap3(c);
  a.m3_prime = count_mono_offby1(c);
  return a;
}

Rational fraction_mono(const DiscreteColoring& c) { return Rational(count_mono_ap3(c), count_ap3(c.size())); }

Rational bead_fraction(const DiscreteColoring& c) {
  const auto a = count_all(c);
  return (Rational(a.m3) + Rational(a.m3_prime, 2)) / (Rational(a.N) * Rational(a.N));
}

DiscreteColoring discretize(const Endpoints& e, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  DiscreteColoring c;
  c.colors.reserve(std::size_t(N));
  int s = 0;
  for (std::int64_t i = 1; i <= N; ++i) {
    const Rational mid(2 * i - 1, 2 * N);
    while (e.x[std::size_t(s + 1)] < mid) ++s;
    c.colors.push_back(static_cast<std::uint8_t>(s % 2));
  }
  return c;
}

OffBy1Relation offby1_relation_check(const DiscreteColoring& c) {
  OffBy1Relation r;
  r.m3_prime = count_mono_offby1(c);
  r.twice_m3 = 2 * count_mono_ap3(c);
  r.defect = r.m3_prime - r.twice_m3;
  return r;
}

}  // namespace monoap
