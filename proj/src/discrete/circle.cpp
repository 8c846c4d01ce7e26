#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "monoap/discrete.hpp"
#include "monoap/errors.hpp"
#include "monoap/parallel.hpp"

namespace monoap {

void CircleColoring::validate() const {
  if (arcs.empty()) throw std::invalid_argument("a circle coloring needs at least one arc");
  auto sorted = arcs;
  std::sort(sorted.begin(), sorted.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
  Rational total;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    const auto& arc = sorted[a];
    if (arc.start.sign() < 0 || arc.start >= Rational(1)) throw std::invalid_argument("arc start outside [0, 1)");
    if (arc.length.sign() <= 0) throw std::invalid_argument("arc length must be positive");
    if (arc.color > 1) throw std::invalid_argument("arc color must be R or B");
    Rational next = a + 1 < sorted.size() ? sorted[a + 1].start : sorted.front().start + Rational(1);
    if (arc.start + arc.length != next) throw std::invalid_argument("arcs must tile the circle without gaps or overlaps");
    total += arc.length;
  }
  if (total != Rational(1)) throw std::invalid_argument("arc lengths must sum to 1");
}

Rational CircleColoring::measure(std::uint8_t color) const {
  Rational m;
  for (const auto& a : arcs)
    if (a.color == color) m += a.length;
  return m;
}

CircleColoring CircleColoring::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("arcs must be a JSON array");
  CircleColoring c;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("start") || !item.contains("length") || !item.contains("color"))
      throw ParseError("each arc needs start, length and color");
    if (!item["start"].is_string() || !item["length"].is_string() || !item["color"].is_string())
      throw ParseError("arc fields must be strings");
    Arc a;
    a.start = parse_rational(item["start"].get<std::string>());
    a.length = parse_rational(item["length"].get<std::string>());
    const auto color = item["color"].get<std::string>();
    if (color == "R") a.color = 0;
    else if (color == "B") a.color = 1;
    else throw ParseError("arc color must be \"R\" or \"B\"");
    c.arcs.push_back(std::move(a));
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return c;
}

nlohmann::ordered_json CircleColoring::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& a : arcs) {
    nlohmann::ordered_json o;
    o["start"] = a.start.str();
    o["length"] = a.length.str();
    o["color"] = a.color ? "B" : "R";
    arr.push_back(std::move(o));
  }
  return arr;
}

Rational circle_mono_fraction(const Rational& p) {
  if (p.sign() < 0 || p > Rational(1)) throw std::invalid_argument("p must lie in [0, 1]");
  return Rational(1) - Rational(3) * p + Rational(3) * p * p;
}

namespace {

using u128 = unsigned __int128;

// ceil(q * 2^64) for q in [0, 1], exact.
u128 fixed_point_ceil(const Rational& q) {
  mpz_class scaled = q.numerator() << 64;
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), scaled.get_mpz_t(), q.denominator().get_mpz_t());
  const std::uint64_t lo = mpz_class(out & mpz_class("18446744073709551615")).get_ui();
  const std::uint64_t hi = mpz_class(out >> 64).get_ui();
  return (u128(hi) << 64) | lo;
}

struct Lookup {
  std::vector<u128> starts;  // sorted thresholds; starts[0] == 0
  std::vector<std::uint8_t> colors;

  explicit Lookup(const CircleColoring& c) {
    // Cut every arc at 0 so segments are non-wrapping, then sort.
    std::vector<std::pair<Rational, std::uint8_t>> segs;
    for (const auto& a : c.arcs) {
      segs.emplace_back(a.start, a.color);
      if (a.start + a.length > Rational(1)) segs.emplace_back(Rational(0), a.color);
    }
    std::sort(segs.begin(), segs.end());
    for (const auto& [s, col] : segs) {
      starts.push_back(fixed_point_ceil(s));
      colors.push_back(col);
    }
  }

  std::uint8_t color(std::uint64_t t) const {
    auto it = std::upper_bound(starts.begin(), starts.end(), u128(t));
    return colors[std::size_t(it - starts.begin()) - 1];
  }
};

constexpr std::uint64_t kChunk = 65536;

}  // namespace

MonteCarloEstimate circle_monte_carlo(const CircleColoring& c, std::uint64_t samples, std::uint64_t seed, int workers) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  c.validate();
  const Lookup lookup(c);
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, workers, [&](std::size_t k) {
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(k), std::uint32_t(k >> 32)};
    std::mt19937_64 rng(seq);
    const std::uint64_t begin = k * kChunk, end = std::min(samples, begin + kChunk);
    std::uint64_t h = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      const std::uint64_t x = rng(), d = rng();
      const auto col = lookup.color(x);
      h += col == lookup.color(x + d) && col == lookup.color(x + 2 * d);
    }
    hits[k] = h;
  });
  MonteCarloEstimate est;
  est.samples = samples;
  for (auto h : hits) est.hits += h;
  est.estimate = double(est.hits) / double(samples);
  est.standard_error = std::sqrt(est.estimate * (1 - est.estimate) / double(samples));
  return est;
}

}  // namespace monoap
