#pragma once

// Branch-and-certify enumeration of the chambers cut out by the hyperplanes
// x_i + x_j = 2x_k inside the antisymmetric endpoint polytope.
//
// Pairs are inserted one at a time. Every partial configuration that survives
// a generation has a strictly feasible placement system, certified by the
// exact LP; the next pair then branches over its admissible k.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoap/diagram.hpp"

namespace monoap {

enum class PairOrder { DecreasingSpan, Lexicographic };

/// Every pair 0 <= i < j <= n with i + j != n. DecreasingSpan sorts by
/// decreasing j - i with lexicographic ties.
std::vector<std::pair<int, int>> pair_processing_order(int n, PairOrder order = PairOrder::DecreasingSpan);

struct EnumerationProgress {
  std::size_t pair_index = 0;  // pairs finished so far
  std::size_t pair_count = 0;
  std::size_t survivors = 0;
  long lp_solves = 0;
};

struct EnumerationOptions {
  int workers = 1;
  PairOrder order = PairOrder::DecreasingSpan;
  /// Place a pair whose mirror image is already placed without an LP solve.
  bool use_mirror_symmetry = false;
  /// Written after a generation once this many seconds passed since the last write.
  std::optional<std::filesystem::path> checkpoint_path;
  double checkpoint_interval_seconds = 30.0;
  /// Stop (and checkpoint) after processing this many more pairs.
  std::optional<std::size_t> stop_after;
  std::function<void(const EnumerationProgress&)> progress;
};

struct EnumerationResult {
  int n = 0;
  bool complete = false;
  /// Complete: every chamber, sorted by serialization. Otherwise the survivors.
  std::vector<Configuration> configs;
  std::size_t next_pair_index = 0;
  long lp_solves = 0;
};

struct EnumerationCheckpoint {
  int n = 0;
  std::vector<std::pair<int, int>> pair_order;
  std::size_t next_pair_index = 0;
  std::vector<Configuration> survivors;
};

EnumerationResult enumerate_configurations(int n, const EnumerationOptions& options = {});

/// Continues from a checkpoint file. Throws IoError on a corrupt or
/// version-incompatible checkpoint, before producing any output.
EnumerationResult resume(const std::filesystem::path& checkpoint, const EnumerationOptions& options = {});
EnumerationResult resume(const EnumerationCheckpoint& checkpoint, const EnumerationOptions& options = {});

void write_checkpoint(const std::filesystem::path& path, const EnumerationCheckpoint& ckpt);
EnumerationCheckpoint read_checkpoint(const std::filesystem::path& path);

/// Strict feasibility of the configuration's chamber, by exact LP.
bool chamber_is_feasible(const Configuration& cfg);

std::string cache_file_name(int n);       // configs_n{N}.txt
std::string checkpoint_file_name(int n);  // enum_n{N}.ckpt

/// Header `n=<N> count=<C> version=1`, then one sorted configuration per line.
void write_cache(const std::filesystem::path& path, int n, const std::vector<Configuration>& configs);
/// Validates header, count, order and completeness. Throws IoError.
std::vector<Configuration> read_cache(const std::filesystem::path& path, int n);

/// Reads `dir/configs_n{N}.txt` when present, otherwise enumerates and
/// writes it (when dir is given).
std::vector<Configuration> load_or_enumerate(int n, const std::optional<std::filesystem::path>& dir,
                                             const EnumerationOptions& options = {});

}  // namespace monoap
