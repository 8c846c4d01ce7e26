#pragma once

// Exact global minimisation of the monochromatic 3-AP measure over
// antisymmetric block colorings with at most n_max blocks.
//
// Inside one chamber f is a quadratic; on the closed endpoint polytope its
// minimum sits either at a zero of that quadratic's gradient lying in the
// closed chamber (f is C^1 across facets) or on the polytope boundary, which
// consists of colorings with fewer blocks.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monoap/diagram.hpp"

namespace monoap {

struct CriticalCandidate {
  Point point;
  Rational value;
  bool affine = false;  // positive-dimensional critical set
};

/// Zero of the gradient inside the closed region, if any.
std::optional<CriticalCandidate> critical_points(const QuadraticForm& form, const std::vector<Constraint>& region);

struct CriticalPointRecord {
  int n = 0;
  std::size_t config_index = 0;  // line index in the sorted configuration list
  std::string config_line;
  std::uint64_t config_hash = 0;  // FNV-1a 64 of config_line
  Point point;                    // free variables
  Point endpoints;                // x_0..x_n
  Rational value;
};

struct PerNSummary {
  int n = 0;
  std::size_t configurations = 0;
  std::size_t critical_points = 0;
  std::optional<CriticalPointRecord> best;
  Rational cumulative_minimum;
  double seconds = 0;
};

struct MinimizationReport {
  int n_max = 0;
  bool certified = true;
  std::vector<PerNSummary> per_n;
  CriticalPointRecord global;
  /// Every record attaining the global minimum, deduplicated by endpoints.
  std::vector<CriticalPointRecord> minimizers;
  /// All minimizers describe one coloring once zero-length blocks are merged.
  bool unique = false;
  /// Interior cut points of that coloring.
  Point canonical_cuts;
};

struct MinimizeOptions {
  std::optional<std::filesystem::path> config_cache_dir;
  /// Require cached configuration files instead of enumerating.
  bool offline = false;
  int workers = 1;
  /// Allow n_max > 12.
  bool allow_uncertified = false;
  std::function<void(const PerNSummary&)> progress;
};

MinimizationReport global_minimize(int n_max, const MinimizeOptions& options = {});

/// Interior points where the color changes, after dropping empty blocks.
Point coloring_cuts(const Point& endpoints);

struct PointCertificate {
  bool is_critical = false;
  Rational value;
  Point gradient;
  Configuration configuration;
};

/// Value and gradient of the chamber's form at e. TieError propagates.
PointCertificate certify_point(const Endpoints& e);

nlohmann::ordered_json to_json(const CriticalPointRecord& r);
/// Timing is included only on request, so the default output is byte-stable.
nlohmann::ordered_json to_json(const MinimizationReport& report, bool include_timing = false);
nlohmann::ordered_json rationals_to_json(const Point& p);

}  // namespace monoap
