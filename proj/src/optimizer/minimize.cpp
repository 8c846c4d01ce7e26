#include <chrono>
#include <stdexcept>

#include "monoap/enumerator.hpp"
#include "monoap/errors.hpp"
#include "monoap/io.hpp"
#include "monoap/linsolve.hpp"
#include "monoap/lp.hpp"
#include "monoap/optimizer.hpp"
#include "monoap/parallel.hpp"

namespace monoap {

std::optional<CriticalCandidate> critical_points(const QuadraticForm& form, const std::vector<Constraint>& region) {
  const int m = form.num_vars();
  // grad = 2 Q y + L = 0
  Matrix a(static_cast<std::size_t>(m), Point(static_cast<std::size_t>(m)));
  Point b(static_cast<std::size_t>(m));
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) a[u][v] = form.quad(u, v) + form.quad(u, v);
    b[u] = -form.linear(u);
  }
  auto sol = solve_linear(a, b);
  if (sol.kind == SolveKind::Inconsistent) return std::nullopt;

  if (sol.kind == SolveKind::Unique) {
    for (const auto& r : region)
      if (!r.closure().satisfied_by(sol.particular)) return std::nullopt;
    return CriticalCandidate{sol.particular, form.eval(sol.particular), false};
  }

  auto p = LPProblem::unit_box(m);
  for (const auto& r : region) p.constraints.push_back(r.closure());
  for (int u = 0; u < m; ++u) {
    LinearExpr g(form.linear(u));
    for (int v = 0; v < m; ++v) g += LinearExpr::variable(v, a[u][v]);
    p.constraints.push_back({g, Relation::Equal});
  }
  p.objective = LinearExpr();
  auto lp = maximize(p);
  if (lp.kind != LPStatus::Optimal) return std::nullopt;

  // The value is constant on the whole critical set.
  const Rational value = form.eval(lp.witness);
  Point shifted = sol.particular;
  for (int u = 0; u < m; ++u) shifted[u] += sol.nullspace.front()[u];
  if (form.eval(sol.particular) != value || form.eval(shifted) != value)
    throw InternalError("form value varies along its critical set");
  return CriticalCandidate{lp.witness, value, true};
}

Point coloring_cuts(const Point& x) {
  // Runs of (color, right end) over non-empty blocks, merging equal colors.
  std::vector<std::pair<int, Rational>> runs;
  for (std::size_t s = 0; s + 1 < x.size(); ++s) {
    if (x[s] == x[s + 1]) continue;
    const int color = static_cast<int>(s % 2);
    if (!runs.empty() && runs.back().first == color)
      runs.back().second = x[s + 1];
    else
      runs.emplace_back(color, x[s + 1]);
  }
  Point cuts;
  for (std::size_t r = 0; r + 1 < runs.size(); ++r) cuts.push_back(runs[r].second);
  return cuts;
}

namespace {

Point full_endpoints(int n, const Point& free) {
  if (n == 0) return {Rational(0), Rational(1)};
  return Endpoints::from_free(n, free).x;
}

struct Found {
  Point point;
  Rational value;
};

}  // namespace

MinimizationReport global_minimize(int n_max, const MinimizeOptions& options) {
  if (n_max < 0 || n_max % 2 != 0) throw std::invalid_argument("n_max must be even and nonnegative");
  if (n_max > 12 && !options.allow_uncertified) throw std::invalid_argument("n_max > 12 needs the uncertified flag");

  MinimizationReport rep;
  rep.n_max = n_max;
  rep.certified = n_max <= 12;
  std::vector<CriticalPointRecord> all_min;
  std::optional<Rational> best;

  for (int n = 0; n <= n_max; n += 2) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Configuration> configs;
    if (options.offline) {
      if (!options.config_cache_dir) throw IoError("offline mode needs a configuration cache directory");
      configs = read_cache(*options.config_cache_dir / cache_file_name(n), n);
    } else {
      EnumerationOptions eo;
      eo.workers = options.workers;
      eo.use_mirror_symmetry = true;
      configs = load_or_enumerate(n, options.config_cache_dir, eo);
    }

    std::vector<std::optional<Found>> found(configs.size());
    parallel_for(configs.size(), options.workers, [&](std::size_t c) {
      auto cand = critical_points(mono_fraction_form(configs[c]), chamber_constraints(configs[c], true));
      if (cand) found[c] = Found{std::move(cand->point), std::move(cand->value)};
    });

    PerNSummary sum;
    sum.n = n;
    sum.configurations = configs.size();
    std::optional<Rational> n_min;
    for (const auto& f : found) {
      if (!f) continue;
      ++sum.critical_points;
      if (!n_min || f->value < *n_min) n_min = f->value;
    }
    auto make_record = [&](std::size_t c) {
      CriticalPointRecord r;
      r.n = n;
      r.config_index = c;
      r.config_line = configs[c].serialize();
      r.config_hash = fnv1a64(r.config_line);
      r.point = found[c]->point;
      r.endpoints = full_endpoints(n, r.point);
      r.value = found[c]->value;
      return r;
    };
    if (n_min) {
      for (std::size_t c = 0; c < found.size(); ++c) {
        if (!found[c] || found[c]->value != *n_min) continue;
        if (!sum.best) sum.best = make_record(c);
        if (best && *n_min > *best) continue;
        if (!best || *n_min < *best) {
          best = *n_min;
          all_min.clear();
        }
        all_min.push_back(make_record(c));
      }
    }
    if (!best) throw InternalError("no critical point found for n=" + std::to_string(n));
    sum.cumulative_minimum = *best;
    sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (options.progress) options.progress(sum);
    rep.per_n.push_back(std::move(sum));
  }

  // Deduplicate minimizers by endpoints, then compare the colorings they describe.
  for (auto& r : all_min) {
    bool dup = false;
    for (const auto& have : rep.minimizers) dup = dup || (have.n == r.n && have.endpoints == r.endpoints);
    if (!dup) rep.minimizers.push_back(std::move(r));
  }
  rep.global = rep.minimizers.front();
  rep.canonical_cuts = coloring_cuts(rep.global.endpoints);
  rep.unique = true;
  for (const auto& r : rep.minimizers) rep.unique = rep.unique && coloring_cuts(r.endpoints) == rep.canonical_cuts;
  return rep;
}

PointCertificate certify_point(const Endpoints& e) {
  PointCertificate pc;
  pc.configuration = derive_configuration(e);
  auto form = mono_fraction_form(pc.configuration);
  auto y = e.free_variables();
  pc.value = form.eval(y);
  pc.gradient = form.gradient(y);
  if (pc.value != evaluate_f(e)) throw InternalError("chamber form disagrees with direct evaluation");
  pc.is_critical = true;
  for (const auto& g : pc.gradient) pc.is_critical = pc.is_critical && g.is_zero();
  return pc;
}

nlohmann::ordered_json rationals_to_json(const Point& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : p) arr.push_back(r.str());
  return arr;
}

nlohmann::ordered_json to_json(const CriticalPointRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["config_index"] = r.config_index;
  j["config_line"] = r.config_line;
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.config_hash));
  j["config_hash"] = hash;
  j["point"] = rationals_to_json(r.point);
  j["endpoints"] = rationals_to_json(r.endpoints);
  j["value"] = r.value.str();
  return j;
}

nlohmann::ordered_json to_json(const MinimizationReport& rep, bool include_timing) {
  nlohmann::ordered_json j;
  j["n_max"] = rep.n_max;
  j["certified"] = rep.certified;
  j["global"] = to_json(rep.global);
  auto per = nlohmann::ordered_json::array();
  for (const auto& s : rep.per_n) {
    nlohmann::ordered_json e;
    e["n"] = s.n;
    e["configurations"] = s.configurations;
    e["critical_points"] = s.critical_points;
    e["minimum"] = s.best ? to_json(*s.best) : nlohmann::ordered_json(nullptr);
    e["cumulative_minimum"] = s.cumulative_minimum.str();
    if (include_timing) e["seconds"] = s.seconds;
    per.push_back(std::move(e));
  }
  j["per_n"] = std::move(per);
  auto mins = nlohmann::ordered_json::array();
  for (const auto& r : rep.minimizers) mins.push_back(to_json(r));
  j["minimizers"] = std::move(mins);
  j["unique"] = rep.unique;
  j["canonical_cuts"] = rationals_to_json(rep.canonical_cuts);
  j["uniqueness_method"] = "all minimum-attaining critical points collected, zero-length blocks merged, colorings compared";
  return j;
}

}  // namespace monoap
