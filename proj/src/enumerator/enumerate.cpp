#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>

#include "monoap/enumerator.hpp"
#include "monoap/errors.hpp"
#include "monoap/lp.hpp"
#include "monoap/parallel.hpp"

namespace monoap {

std::vector<std::pair<int, int>> pair_processing_order(int n, PairOrder order) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("pair order needs an even n >= 0");
  auto pairs = Configuration::pairs(n);
  if (order == PairOrder::DecreasingSpan)
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return a.second - a.first > b.second - b.first; });
  return pairs;
}

namespace {

bool feasible(int n, const std::vector<Constraint>& rows) {
  auto p = LPProblem::unit_box(num_free_vars(n));
  p.constraints = rows;
  return check_feasible_strict(p).kind == LPStatus::Feasible;
}

// Range of k not already excluded by pairs placed below or above (i, j)
// componentwise, or by the identity x_a + x_{n-a} = 1.
std::pair<int, int> candidate_range(const Configuration& cfg, int i, int j) {
  const int n = cfg.n();
  int lo = i, hi = j - 1;
  if (i + j < n) hi = std::min(hi, n / 2 - 1);
  if (i + j > n) lo = std::max(lo, n / 2);
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (!Configuration::is_pair(n, a, b) || (a == i && b == j)) continue;
      auto c = cfg.kappa(a, b);
      if (!c) continue;
      if (a <= i && b <= j) lo = std::max(lo, *c);
      if (a >= i && b >= j) hi = std::min(hi, *c);
    }
  return {lo, hi};
}

class Generation {
 public:
  Generation(int n, std::pair<int, int> pair, bool mirror, std::atomic<long>& solves)
      : n_(n), i_(pair.first), j_(pair.second), mirror_(mirror), solves_(solves) {}

  std::vector<Configuration> extend(const Configuration& parent) const {
    std::vector<Configuration> children;
    if (mirror_) {
      // The mirror pair's rows coincide with ours after substitution, so its
      // placement fixes k and the parent's certificate carries over.
      if (auto c = parent.kappa(n_ - j_, n_ - i_)) {
        children.push_back(parent);
        children.back().set(i_, j_, n_ - 1 - *c);
        return children;
      }
    }
    auto [lo, hi] = candidate_range(parent, i_, j_);
    if (lo > hi) throw InternalError("a strictly feasible partial configuration has no admissible slot");
    if (lo == hi) {
      // Every point of the parent's open chamber has this slot, so the child
      // is the same chamber minus a null set.
      children.push_back(parent);
      children.back().set(i_, j_, lo);
      return children;
    }
    const auto base = chamber_constraints(parent);
    for (int k = lo; k <= hi; ++k) {
      auto rows = base;
      for (auto& r : placement_constraints(n_, i_, j_, k)) {
        if (std::find(base.begin(), base.end(), r) == base.end()) rows.push_back(std::move(r));
      }
      ++solves_;
      if (!feasible(n_, rows)) continue;
      children.push_back(parent);
      children.back().set(i_, j_, k);
    }
    if (children.empty()) throw InternalError("a strictly feasible partial configuration has no extension");
    return children;
  }

 private:
  int n_, i_, j_;
  bool mirror_;
  std::atomic<long>& solves_;
};

EnumerationResult run(EnumerationCheckpoint state, const EnumerationOptions& opt) {
  using clock = std::chrono::steady_clock;
  const int n = state.n;
  std::atomic<long> solves{0};
  auto last_write = clock::now();
  std::size_t processed = 0;

  auto save = [&] {
    if (opt.checkpoint_path) write_checkpoint(*opt.checkpoint_path, state);
    last_write = clock::now();
  };

  while (state.next_pair_index < state.pair_order.size()) {
    if (opt.stop_after && processed >= *opt.stop_after) break;
    Generation gen(n, state.pair_order[state.next_pair_index], opt.use_mirror_symmetry, solves);
    std::vector<std::vector<Configuration>> children(state.survivors.size());
    parallel_for(state.survivors.size(), opt.workers, [&](std::size_t s) { children[s] = gen.extend(state.survivors[s]); });

    std::size_t total = 0;
    for (const auto& c : children) total += c.size();
    std::vector<Configuration> next;
    next.reserve(total);
    for (auto& c : children)
      for (auto& cfg : c) next.push_back(std::move(cfg));
    state.survivors = std::move(next);
    ++state.next_pair_index;
    ++processed;

    if (opt.progress) opt.progress({state.next_pair_index, state.pair_order.size(), state.survivors.size(), solves.load()});
    if (opt.checkpoint_path &&
        std::chrono::duration<double>(clock::now() - last_write).count() >= opt.checkpoint_interval_seconds)
      save();
  }

  EnumerationResult res;
  res.n = n;
  res.next_pair_index = state.next_pair_index;
  if (state.next_pair_index < state.pair_order.size()) {
    save();
    res.lp_solves = solves.load();
    res.configs = std::move(state.survivors);
    return res;
  }

  // Emission: every chamber is certified again from scratch.
  std::vector<char> ok(state.survivors.size(), 0);
  parallel_for(state.survivors.size(), opt.workers, [&](std::size_t s) {
    const auto& cfg = state.survivors[s];
    ok[s] = cfg.complete() && feasible(n, chamber_constraints(cfg));
  });
  solves += static_cast<long>(ok.size());
  if (std::find(ok.begin(), ok.end(), 0) != ok.end()) throw InternalError("emitted configuration failed re-certification");

  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(state.survivors.size());
  for (std::size_t s = 0; s < state.survivors.size(); ++s) keys.emplace_back(state.survivors[s].serialize(), s);
  std::sort(keys.begin(), keys.end());
  for (std::size_t s = 1; s < keys.size(); ++s)
    if (keys[s].first == keys[s - 1].first) throw InternalError("duplicate configuration emitted");
  res.configs.reserve(keys.size());
  for (const auto& [key, s] : keys) res.configs.push_back(std::move(state.survivors[s]));
  state.survivors.clear();

  if (opt.checkpoint_path) {
    EnumerationCheckpoint done{n, state.pair_order, state.pair_order.size(), res.configs};
    write_checkpoint(*opt.checkpoint_path, done);
  }
  res.complete = true;
  res.lp_solves = solves.load();
  return res;
}

}  // namespace

bool chamber_is_feasible(const Configuration& cfg) { return feasible(cfg.n(), chamber_constraints(cfg)); }

EnumerationResult enumerate_configurations(int n, const EnumerationOptions& options) {
  EnumerationCheckpoint start;
  start.n = n;
  start.pair_order = pair_processing_order(n, options.order);
  start.survivors.emplace_back(n);
  if (!chamber_is_feasible(start.survivors.front())) throw InternalError("the endpoint chain is infeasible");
  return run(std::move(start), options);
}

EnumerationResult resume(const EnumerationCheckpoint& checkpoint, const EnumerationOptions& options) {
  return run(checkpoint, options);
}

EnumerationResult resume(const std::filesystem::path& checkpoint, const EnumerationOptions& options) {
  return run(read_checkpoint(checkpoint), options);
}

}  // namespace monoap
