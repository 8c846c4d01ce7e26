#pragma once

// Strip-intersection diagram of a two-coloring of [0,1] into alternating
// blocks (x_s, x_{s+1}), s = 0..n-1.
//
// A 3-AP (a, (a+b)/2, b) is monochromatic iff a lies in strip i, b in strip j
// and the midpoint in strip k with i, j, k of one parity. The set of such
// (a, b) inside the box i x j with 2x_k < a+b < 2x_{k+1} is one of twenty
// polygon types, each with a quadratic area. Summing them gives f(x).

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monoap/linear.hpp"
#include "monoap/lp.hpp"

namespace monoap {

/// Block endpoints x_0 = 0 <= x_1 <= ... <= x_n = 1.
struct Endpoints {
  int n = 0;
  Point x;
  bool antisymmetric = false;

  /// Validates 0 = x_0 <= ... <= x_n = 1 (strictly, unless allow_degenerate).
  /// antisymmetric is detected: x_k + x_{n-k} = 1 for all k.
  explicit Endpoints(Point x, bool allow_degenerate = true);

  bool strictly_monotone() const;
  /// x_1..x_{n/2-1}. Requires antisymmetric.
  Point free_variables() const;
  /// Inverse of free_variables for an even n.
  static Endpoints from_free(int n, const Point& free);
};

/// Number of free variables of an antisymmetric coloring with n blocks.
int num_free_vars(int n);

/// Image of each full variable x_0..x_n in terms of the free variables.
std::vector<LinearExpr> antisymmetric_images(int n);

/// Assignment (i, j) -> k meaning 2x_k < x_i + x_j < 2x_{k+1}, for every
/// 0 <= i < j <= n with i + j != n. Pairs with i + j = n are excluded: their
/// sum is identically 1 = 2x_{n/2}.
class Configuration {
 public:
  explicit Configuration(int n = 0);

  int n() const { return n_; }
  static bool is_pair(int n, int i, int j) { return 0 <= i && i < j && j <= n && i + j != n; }
  /// Every pair in lexicographic order.
  static std::vector<std::pair<int, int>> pairs(int n);

  std::optional<int> kappa(int i, int j) const;
  /// Throws std::out_of_range when (i, j) is unassigned.
  int at(int i, int j) const;
  /// Requires i <= k <= j - 1.
  void set(int i, int j, int k);
  void unset(int i, int j);
  int assigned() const { return assigned_; }
  bool complete() const;

  /// Is x_a + x_b <= 2 x_t implied? Ties count as "<=". Any 0 <= a, b, t <= n.
  /// Throws std::logic_error when the answer depends on an unassigned pair.
  bool sum_at_most_double(int a, int b, int t) const;

  /// Image under x -> 1 - reversed(x): kappa'(n-j, n-i) = n-1-kappa(i,j).
  Configuration mirror() const;

  /// Assigned entries `i,j:k` in lexicographic pair order joined by `;`.
  std::string serialize() const;
  /// Throws ParseError. With require_complete, every pair must appear.
  static Configuration parse(std::string_view line, int n, bool require_complete = true);

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int index(int i, int j) const { return i * (n_ + 1) + j; }

  int n_ = 0;
  std::vector<signed char> kappa_;
  int assigned_ = 0;
};

/// One of the twenty polygon types, 1..20.
struct RegionCase {
  int id = 0;
  friend bool operator==(RegionCase, RegionCase) = default;
};

/// Classification from the comparisons implied by a complete configuration.
RegionCase classify_region(int i, int j, int k, const Configuration& cfg);
/// Classification by exact comparison of the eight sums at concrete endpoints.
RegionCase classify_region(int i, int j, int k, std::span<const Rational> x);

/// Area of the region as a quadratic in x_0..x_n. Cases 19 and 20 give zero.
QuadraticForm region_area_form(RegionCase c, int i, int j, int k, int n);
Rational region_area(RegionCase c, int i, int j, int k, std::span<const Rational> x);

/// Monochromatic 3-AP measure of an antisymmetric configuration, as a form in
/// the free variables. n = 0 is the single-block coloring (constant 1).
QuadraticForm mono_fraction_form(const Configuration& cfg);

/// Direct evaluation, no configuration needed.
Rational evaluate_f(const Endpoints& e);

/// Chamber containing strictly monotone antisymmetric endpoints. Throws
/// TieError on x_i + x_j = 2x_k.
Configuration derive_configuration(const Endpoints& e);

/// Sum of all region areas over every (i, j, k). Equals 1 for monotone e.
Rational total_area_check(const Endpoints& e);

/// The system cutting out the configuration's chamber in free variables:
/// strict chain 0 < x_1 < ... < x_{n/2-1} < 1/2 plus the assigned placements.
/// Rows implied by the chain are dropped and duplicates removed. With closed,
/// every relation is relaxed to <=. Rows whose pair is unassigned are skipped.
std::vector<Constraint> chamber_constraints(const Configuration& cfg, bool closed = false);
/// The two placement rows for one pair in free variables, minus rows the chain already implies.
std::vector<Constraint> placement_constraints(int n, int i, int j, int k, bool closed = false);
/// Strict chain rows for the free variables.
std::vector<Constraint> chain_constraints(int n, bool closed = false);

}  // namespace monoap
