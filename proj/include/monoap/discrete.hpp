#pragma once

// Counting over two-colorings of [N] = {1..N}, and the circle analogue.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "monoap/diagram.hpp"

namespace monoap {

/// Colors of 1..N; 0 = R, 1 = B.
struct DiscreteColoring {
  std::vector<std::uint8_t> colors;

  /// "RRBB". Throws ParseError on anything else, including the empty string.
  static DiscreteColoring parse(std::string_view text);
  std::string str() const;
  std::int64_t size() const { return static_cast<std::int64_t>(colors.size()); }
  int block_count() const;
  DiscreteColoring swapped() const;
  /// Block endpoints of the merged bead coloring on [0,1]: one cut per color change.
  Endpoints bead_endpoints() const;
};

struct APCounts {
  std::int64_t N = 0;
  std::int64_t ap3_total = 0;
  std::int64_t m3 = 0;
  std::int64_t offby1_total = 0;
  std::int64_t m3_prime = 0;
};

/// (a, d) with a, a+d, a+2d in [N]; d may be zero or negative.
std::int64_t count_ap3(std::int64_t N);
/// Ordered (t1, t2, t3) in [N]^3 with t1 + t3 - 2 t2 = +-1.
std::int64_t count_offby1(std::int64_t N);
std::int64_t count_mono_ap3(const DiscreteColoring& c);
std::int64_t count_mono_offby1(const DiscreteColoring& c);
APCounts count_all(const DiscreteColoring& c);

/// m3 / count_ap3(N).
Rational fraction_mono(const DiscreteColoring& c);
/// (m3 + m3'/2) / N^2.
Rational bead_fraction(const DiscreteColoring& c);

/// Bead i takes the color of the block containing (i - 1/2)/N; a midpoint on
/// a boundary goes to the left block. Block 0 is R.
DiscreteColoring discretize(const Endpoints& e, std::int64_t N);

struct OffBy1Relation {
  std::int64_t m3_prime = 0;
  std::int64_t twice_m3 = 0;
  std::int64_t defect = 0;  // m3' - 2 m3
};
OffBy1Relation offby1_relation_check(const DiscreteColoring& c);

struct Arc {
  Rational start;   // in [0, 1)
  Rational length;  // > 0
  std::uint8_t color = 0;
};

/// Arcs partitioning the circle R/Z.
struct CircleColoring {
  std::vector<Arc> arcs;

  /// Throws std::invalid_argument unless the arcs tile the circle exactly.
  void validate() const;
  Rational measure(std::uint8_t color) const;
  /// [{"start": "p/q", "length": "p/q", "color": "R"|"B"}, ...]; throws ParseError.
  static CircleColoring from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

/// 1 - 3p + 3p^2 for red measure p.
Rational circle_mono_fraction(const Rational& p);

struct MonteCarloEstimate {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double estimate = 0;
  double standard_error = 0;  // sqrt(p(1-p)/samples)
};

/// Samples (x, d) uniformly on the circle and tests x, x+d, x+2d. Points are
/// 64-bit fixed-point fractions, so all arithmetic mod 1 and every arc lookup
/// is exact. Sample s belongs to chunk s / 65536; chunk c draws from
/// mt19937_64 seeded with seed_seq{seed_lo, seed_hi, c}, so the result does
/// not depend on the worker count.
MonteCarloEstimate circle_monte_carlo(const CircleColoring& c, std::uint64_t samples, std::uint64_t seed,
                                      int workers = 1);

}  // namespace monoap
