// monoap: command-line front end.
//
// Exit codes: 0 ok, 1 usage or malformed input, 2 I/O, 3 internal
// inconsistency, 4 degenerate input (a tie x_i + x_j = 2 x_k).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoap/discrete.hpp"
#include "monoap/enumerator.hpp"
#include "monoap/errors.hpp"
#include "monoap/io.hpp"
#include "monoap/optimizer.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace monoap;

namespace {

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kInternal = 3, kTie = 4 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

int workers_from_env() {
  const char* env = std::getenv("MONOAP_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096) throw UsageError("MONOAP_WORKERS must be a positive integer");
  return static_cast<int>(v);
}

// Output files are validated before any work starts.
void require_writable_parent(const fs::path& p) {
  const auto parent = p.has_parent_path() ? p.parent_path() : fs::path(".");
  if (!fs::is_directory(parent)) throw IoError("directory does not exist: " + parent.string());
}

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in endpoint list");
    p.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (p.empty()) throw ParseError("empty endpoint list");
  return p;
}

ordered_json counts_json(const DiscreteColoring& c, bool bead) {
  const auto a = count_all(c);
  ordered_json j;
  j["N"] = a.N;
  j["blocks"] = c.block_count();
  j["ap3_total"] = a.ap3_total;
  j["m3"] = a.m3;
  j["offby1_total"] = a.offby1_total;
  j["m3_prime"] = a.m3_prime;
  j["fraction"] = Rational(a.m3, a.ap3_total).str();
  if (bead) j["bead_fraction"] = bead_fraction(c).str();
  return j;
}

CircleColoring single_arc(const Rational& p) {
  CircleColoring c;
  if (p.is_zero()) c.arcs.push_back({Rational(0), Rational(1), 1});
  else if (p == Rational(1)) c.arcs.push_back({Rational(0), Rational(1), 0});
  else c.arcs = {{Rational(0), p, 0}, {p, Rational(1) - p, 1}};
  return c;
}

struct Args {
  int workers = 0;  // 0: take MONOAP_WORKERS

  int n = -1;
  std::optional<std::string> out, checkpoint;
  bool mirror = false, resume = false;
  double checkpoint_interval = 30;
  std::optional<std::size_t> stop_after;

  int n_max = -1;
  std::optional<std::string> cache_dir, report;
  bool uncertified = false, offline = false, timing = false, verbose = false;

  std::string endpoints;

  std::optional<std::string> coloring, file;
  bool bead = false;

  std::optional<std::string> p, arcs;
  std::uint64_t samples = 1000000, seed = 0;
};

int run_enumerate(const Args& a, int workers) {
  if (a.n < 0 || a.n % 2) throw UsageError("--n must be a non-negative even integer");
  if ((a.resume || a.stop_after) && !a.checkpoint) throw UsageError("--resume and --stop-after need --checkpoint");
  const fs::path out = a.out ? fs::path(*a.out) : fs::path(cache_file_name(a.n));
  require_writable_parent(out);
  if (a.checkpoint) require_writable_parent(*a.checkpoint);

  EnumerationOptions opts;
  opts.workers = workers;
  opts.use_mirror_symmetry = a.mirror;
  opts.checkpoint_interval_seconds = a.checkpoint_interval;
  opts.stop_after = a.stop_after;
  if (a.checkpoint) opts.checkpoint_path = fs::path(*a.checkpoint);
  if (a.verbose)
    opts.progress = [](const EnumerationProgress& p) {
      std::cerr << "pair " << p.pair_index << "/" << p.pair_count << " survivors " << p.survivors << " lp "
                << p.lp_solves << "\n";
    };

  EnumerationResult res;
  if (a.resume) {
    const auto ckpt = read_checkpoint(*a.checkpoint);
    if (ckpt.n != a.n) throw UsageError("checkpoint is for n=" + std::to_string(ckpt.n));
    res = resume(ckpt, opts);
  } else {
    res = enumerate_configurations(a.n, opts);
  }

  ordered_json j;
  j["n"] = a.n;
  if (!res.complete) {
    j["complete"] = false;
    j["next_pair_index"] = res.next_pair_index;
    j["survivors"] = res.configs.size();
    emit(j);
    return kOk;
  }
  write_cache(out, a.n, res.configs);
  j["count"] = res.configs.size();
  emit(j);
  return kOk;
}

int run_minimize(const Args& a, int workers) {
  if (a.n_max < 0 || a.n_max % 2) throw UsageError("--n-max must be a non-negative even integer");
  if (a.report) require_writable_parent(*a.report);
  MinimizeOptions opts;
  opts.workers = workers;
  opts.allow_uncertified = a.uncertified;
  opts.offline = a.offline;
  if (a.cache_dir) {
    std::error_code ec;
    fs::create_directories(*a.cache_dir, ec);
    if (ec || !fs::is_directory(*a.cache_dir)) throw IoError("cannot use cache directory " + *a.cache_dir);
    opts.config_cache_dir = fs::path(*a.cache_dir);
  }
  if (a.verbose)
    opts.progress = [](const PerNSummary& s) {
      std::cerr << "n=" << s.n << " configurations " << s.configurations << " critical " << s.critical_points
                << " cumulative " << s.cumulative_minimum.str() << "\n";
    };
  const auto rep = global_minimize(a.n_max, opts);
  if (a.report) atomic_write(*a.report, to_json(rep, a.timing).dump(2) + "\n");
  ordered_json j;
  j["n_max"] = rep.n_max;
  j["minimum"] = rep.global.value.str();
  j["endpoints"] = rationals_to_json(rep.global.endpoints);
  j["unique"] = rep.unique;
  j["certified"] = rep.certified;
  emit(j);
  return kOk;
}

int run_eval(const Args& a) {
  const Endpoints e(parse_point(a.endpoints));
  ordered_json j;
  j["endpoints"] = rationals_to_json(e.x);
  j["value"] = evaluate_f(e).str();
  emit(j);
  return kOk;
}

int run_certify(const Args& a) {
  const Endpoints e(parse_point(a.endpoints));
  if (!e.antisymmetric) throw ParseError("certify needs antisymmetric endpoints");
  if (!e.strictly_monotone()) throw ParseError("certify needs strictly increasing endpoints");
  const auto pc = certify_point(e);
  ordered_json j;
  j["endpoints"] = rationals_to_json(e.x);
  j["value"] = pc.value.str();
  j["gradient"] = rationals_to_json(pc.gradient);
  j["critical"] = pc.is_critical;
  j["configuration"] = pc.configuration.serialize();
  emit(j);
  return kOk;
}

int run_discrete(const Args& a) {
  if (a.coloring.has_value() == a.file.has_value()) throw UsageError("give exactly one of --coloring and --file");
  if (a.coloring) {
    emit(counts_json(DiscreteColoring::parse(*a.coloring), a.bead));
    return kOk;
  }
  std::vector<DiscreteColoring> all;
  std::stringstream ss(read_text(*a.file));
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    all.push_back(DiscreteColoring::parse(line));
  }
  auto arr = ordered_json::array();
  for (const auto& c : all) arr.push_back(counts_json(c, a.bead));
  emit(arr);
  return kOk;
}

int run_circle(const Args& a, int workers) {
  if (a.p.has_value() == a.arcs.has_value()) throw UsageError("give exactly one of --p and --arcs");
  if (a.samples == 0) throw UsageError("--samples must be positive");
  CircleColoring c;
  if (a.p) {
    const auto p = parse_rational(*a.p);
    if (p.sign() < 0 || p > Rational(1)) throw ParseError("--p must lie in [0, 1]");
    c = single_arc(p);
  } else {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_text(*a.arcs));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("arcs file: ") + e.what());
    }
    c = CircleColoring::from_json(doc);
  }
  const auto p = c.measure(0);
  const auto est = circle_monte_carlo(c, a.samples, a.seed, workers);
  ordered_json j;
  j["arcs"] = c.to_json();
  j["p"] = p.str();
  j["closed_form"] = circle_mono_fraction(p).str();
  j["samples"] = est.samples;
  j["seed"] = a.seed;
  j["hits"] = est.hits;
  j["estimate"] = est.estimate;
  j["standard_error"] = est.standard_error;
  emit(j);
  return kOk;
}

int fail(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic 3-AP toolkit"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--workers", a.workers, "Worker threads (default: MONOAP_WORKERS or 1)")->check(CLI::PositiveNumber);

  auto* en = app.add_subcommand("enumerate", "Enumerate the chambers for n blocks and write the cache file");
  en->add_option("--n", a.n, "Number of blocks (even)")->required();
  en->add_option("--out", a.out, "Cache file (default configs_n<N>.txt)");
  en->add_option("--checkpoint", a.checkpoint, "Checkpoint file");
  en->add_option("--checkpoint-interval", a.checkpoint_interval, "Seconds between checkpoint writes");
  en->add_option("--stop-after", a.stop_after, "Stop after this many pairs (writes the checkpoint)");
  en->add_flag("--mirror", a.mirror, "Place mirror pairs without an LP solve");
  en->add_flag("--resume", a.resume, "Continue from --checkpoint");
  en->add_flag("--verbose", a.verbose, "Progress on stderr");
  en->add_option("--workers", a.workers)->check(CLI::PositiveNumber);

  auto* mn = app.add_subcommand("minimize", "Exact global minimum over colorings with at most n_max blocks");
  mn->add_option("--n-max", a.n_max, "Largest block count (even)")->required();
  mn->add_option("--cache-dir", a.cache_dir, "Directory for configs_n<N>.txt files");
  mn->add_option("--report", a.report, "Write the full JSON report here");
  mn->add_flag("--uncertified", a.uncertified, "Allow n_max > 12");
  mn->add_flag("--offline", a.offline, "Fail instead of enumerating when a cache file is missing");
  mn->add_flag("--timing", a.timing, "Include per-n seconds in the report");
  mn->add_flag("--verbose", a.verbose, "Progress on stderr");
  mn->add_option("--workers", a.workers)->check(CLI::PositiveNumber);

  auto* ev = app.add_subcommand("eval", "Monochromatic measure of a block coloring");
  ev->add_option("--endpoints", a.endpoints, "Comma-separated x_0..x_n")->required();

  auto* ce = app.add_subcommand("certify", "Value and gradient of the chamber form at antisymmetric endpoints");
  ce->add_option("--endpoints", a.endpoints, "Comma-separated x_0..x_n")->required();

  auto* di = app.add_subcommand("discrete", "AP counts of a coloring of [N]");
  di->add_option("--coloring", a.coloring, "String over R and B");
  di->add_option("--file", a.file, "One coloring per line");
  di->add_flag("--bead", a.bead, "Also report (m3 + m3'/2)/N^2");

  auto* ci = app.add_subcommand("circle", "Closed form and Monte Carlo estimate on the circle");
  ci->add_option("--p", a.p, "Red measure; red arc [0, p)");
  ci->add_option("--arcs", a.arcs, "JSON file with arcs");
  ci->add_option("--samples", a.samples, "Monte Carlo samples");
  ci->add_option("--seed", a.seed, "RNG seed");
  ci->add_option("--workers", a.workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const int workers = a.workers > 0 ? a.workers : workers_from_env();
    if (*en) return run_enumerate(a, workers);
    if (*mn) return run_minimize(a, workers);
    if (*ev) return run_eval(a);
    if (*ce) return run_certify(a);
    if (*di) return run_discrete(a);
    if (*ci) return run_circle(a, workers);
    return fail(kUsage, "no subcommand");
  } catch (const TieError& e) {
    return fail(kTie, std::string(e.what()) + " (triple " + std::to_string(e.i()) + "," + std::to_string(e.j()) +
                          "," + std::to_string(e.k()) + ")");
  } catch (const IoError& e) {
    return fail(kIo, e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kIo, e.what());
  } catch (const InternalError& e) {
    return fail(kInternal, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kUsage, e.what());
  } catch (const DivisionByZero& e) {
    return fail(kUsage, e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, e.what());
  }
}
