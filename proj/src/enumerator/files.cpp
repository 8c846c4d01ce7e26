#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <set>
#include <sstream>

#include "monoap/enumerator.hpp"
#include "monoap/errors.hpp"
#include "monoap/io.hpp"

namespace monoap {
namespace {

constexpr const char* kCheckpointMagic = "monoap-enumeration-checkpoint version=1";

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view expect_field(std::string_view line, std::string_view key, const std::string& what) {
  if (line.substr(0, key.size()) != key) throw IoError(what + ": expected '" + std::string(key) + "'");
  return line.substr(key.size());
}

std::size_t to_size(std::string_view s, const std::string& what) {
  if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw IoError(what + ": bad number '" + std::string(s) + "'");
  return std::stoull(std::string(s));
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

}  // namespace

std::string cache_file_name(int n) { return "configs_n" + std::to_string(n) + ".txt"; }
std::string checkpoint_file_name(int n) { return "enum_n" + std::to_string(n) + ".ckpt"; }

void write_checkpoint(const std::filesystem::path& path, const EnumerationCheckpoint& ckpt) {
  std::string body = kCheckpointMagic;
  body += "\nn=" + std::to_string(ckpt.n) + "\npairs=";
  for (std::size_t p = 0; p < ckpt.pair_order.size(); ++p) {
    if (p) body += ';';
    body += std::to_string(ckpt.pair_order[p].first) + "," + std::to_string(ckpt.pair_order[p].second);
  }
  body += "\nnext=" + std::to_string(ckpt.next_pair_index);
  body += "\nsurvivors=" + std::to_string(ckpt.survivors.size()) + "\n";
  for (const auto& s : ckpt.survivors) {
    body += s.serialize();
    body += '\n';
  }
  body += "checksum=" + hex64(fnv1a64(body)) + "\n";
  atomic_write(path, body);
}

EnumerationCheckpoint read_checkpoint(const std::filesystem::path& path) {
  const std::string what = "checkpoint " + path.string();
  const std::string text = read_text(path);
  auto at = text.rfind("checksum=");
  if (at == std::string::npos) throw IoError(what + ": missing checksum");
  std::string_view sum = std::string_view(text).substr(at + 9);
  if (!sum.empty() && sum.back() == '\n') sum.remove_suffix(1);
  if (sum != hex64(fnv1a64(std::string_view(text).substr(0, at)))) throw IoError(what + ": checksum mismatch");

  auto lines = split_lines(std::string_view(text).substr(0, at));
  if (lines.size() < 5 || lines[0] != kCheckpointMagic) throw IoError(what + ": unknown format or version");
  EnumerationCheckpoint ck;
  try {
    ck.n = static_cast<int>(to_size(expect_field(lines[1], "n=", what), what));
    if (ck.n % 2 != 0 || ck.n > 40) throw IoError(what + ": unsupported n");
    std::string_view pairs = expect_field(lines[2], "pairs=", what);
    if (!pairs.empty()) {
      std::size_t start = 0;
      while (start <= pairs.size()) {
        auto semi = pairs.find(';', start);
        auto item = pairs.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        auto comma = item.find(',');
        if (comma == std::string_view::npos) throw IoError(what + ": bad pair");
        int i = static_cast<int>(to_size(item.substr(0, comma), what));
        int j = static_cast<int>(to_size(item.substr(comma + 1), what));
        ck.pair_order.emplace_back(i, j);
        if (semi == std::string_view::npos) break;
        start = semi + 1;
      }
    }
    auto sorted = ck.pair_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != Configuration::pairs(ck.n)) throw IoError(what + ": pair order is not a permutation of the pairs");
    ck.next_pair_index = to_size(expect_field(lines[3], "next=", what), what);
    if (ck.next_pair_index > ck.pair_order.size()) throw IoError(what + ": next index out of range");
    const std::size_t count = to_size(expect_field(lines[4], "survivors=", what), what);
    if (lines.size() != 5 + count) throw IoError(what + ": survivor count mismatch");

    std::set<std::pair<int, int>> placed(ck.pair_order.begin(), ck.pair_order.begin() + long(ck.next_pair_index));
    for (std::size_t s = 0; s < count; ++s) {
      auto cfg = Configuration::parse(lines[5 + s], ck.n, false);
      if (cfg.assigned() != static_cast<int>(placed.size())) throw IoError(what + ": survivor has the wrong pairs");
      for (auto [i, j] : placed)
        if (!cfg.kappa(i, j)) throw IoError(what + ": survivor has the wrong pairs");
      ck.survivors.push_back(std::move(cfg));
    }
  } catch (const ParseError& e) {
    throw IoError(what + ": " + e.what());
  }
  return ck;
}

void write_cache(const std::filesystem::path& path, int n, const std::vector<Configuration>& configs) {
  std::string body = "n=" + std::to_string(n) + " count=" + std::to_string(configs.size()) + " version=1\n";
  for (const auto& c : configs) {
    if (c.n() != n) throw std::invalid_argument("configuration with a different n");
    body += c.serialize();
    body += '\n';
  }
  atomic_write(path, body);
}

std::vector<Configuration> read_cache(const std::filesystem::path& path, int n) {
  const std::string what = "cache " + path.string();
  const std::string text = read_text(path);
  auto lines = split_lines(text);
  if (lines.empty()) throw IoError(what + ": empty file");
  const std::string prefix = "n=" + std::to_string(n) + " count=";
  std::string_view head = lines[0];
  if (head.substr(0, prefix.size()) != prefix) throw IoError(what + ": header does not match n=" + std::to_string(n));
  head.remove_prefix(prefix.size());
  auto sp = head.find(' ');
  if (sp == std::string_view::npos || head.substr(sp) != " version=1") throw IoError(what + ": unsupported header");
  const std::size_t count = to_size(head.substr(0, sp), what);
  if (lines.size() != count + 1) throw IoError(what + ": line count does not match header");
  std::vector<Configuration> out;
  out.reserve(count);
  std::string_view prev;
  for (std::size_t l = 1; l <= count; ++l) {
    if (l > 1 && !(prev < lines[l])) throw IoError(what + ": lines are not strictly sorted");
    prev = lines[l];
    try {
      out.push_back(Configuration::parse(lines[l], n, true));
    } catch (const ParseError& e) {
      throw IoError(what + ": line " + std::to_string(l + 1) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Configuration> load_or_enumerate(int n, const std::optional<std::filesystem::path>& dir,
                                             const EnumerationOptions& options) {
  if (dir) {
    auto file = *dir / cache_file_name(n);
    if (std::filesystem::exists(file)) return read_cache(file, n);
  }
  auto res = enumerate_configurations(n, options);
  if (!res.complete) throw InternalError("enumeration stopped early");
  if (dir) {
    std::filesystem::create_directories(*dir);
    write_cache(*dir / cache_file_name(n), n, res.configs);
  }
  return std::move(res.configs);
}

}  // namespace monoap
