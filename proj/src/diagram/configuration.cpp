#include <charconv>
#include <stdexcept>

#include "monoap/diagram.hpp"
#include "monoap/errors.hpp"

namespace monoap {

Configuration::Configuration(int n) : n_(n), kappa_(std::size_t(n + 1) * std::size_t(n + 1), -1) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("configurations need an even block count");
  if (n > 100) throw std::invalid_argument("block count too large");
}

std::vector<std::pair<int, int>> Configuration::pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (is_pair(n, i, j)) out.emplace_back(i, j);
  return out;
}

std::optional<int> Configuration::kappa(int i, int j) const {
  if (!is_pair(n_, i, j)) throw std::out_of_range("not a configuration pair");
  const int k = kappa_[index(i, j)];
  if (k < 0) return std::nullopt;
  return k;
}

int Configuration::at(int i, int j) const {
  auto k = kappa(i, j);
  if (!k) throw std::out_of_range("pair " + std::to_string(i) + "," + std::to_string(j) + " is unassigned");
  return *k;
}

void Configuration::set(int i, int j, int k) {
  if (!is_pair(n_, i, j)) throw std::out_of_range("not a configuration pair");
  if (k < i || k > j - 1) throw std::invalid_argument("kappa outside [i, j-1]");
  auto& slot = kappa_[index(i, j)];
  if (slot < 0) ++assigned_;
  slot = static_cast<signed char>(k);
}

void Configuration::unset(int i, int j) {
  if (!is_pair(n_, i, j)) throw std::out_of_range("not a configuration pair");
  auto& slot = kappa_[index(i, j)];
  if (slot >= 0) --assigned_;
  slot = -1;
}

bool Configuration::complete() const {
  const int total = n_ * (n_ + 1) / 2 - n_ / 2;
  return assigned_ == total;
}

bool Configuration::sum_at_most_double(int a, int b, int t) const {
  if (a > b) std::swap(a, b);
  if (a < 0 || b > n_ || t < 0 || t > n_) throw std::out_of_range("index outside 0..n");
  if (a == b) return a <= t;
  if (a + b == n_) return 2 * t >= n_;
  const int k = kappa_[index(a, b)];
  if (k < 0) throw std::logic_error("comparison needs unassigned pair " + std::to_string(a) + "," + std::to_string(b));
  return k < t;
}

Configuration Configuration::mirror() const {
  Configuration m(n_);
  for (auto [i, j] : pairs(n_)) {
    const int k = kappa_[index(i, j)];
    if (k >= 0) m.set(n_ - j, n_ - i, n_ - 1 - k);
  }
  return m;
}

std::string Configuration::serialize() const {
  std::string out;
  for (auto [i, j] : pairs(n_)) {
    const int k = kappa_[index(i, j)];
    if (k < 0) continue;
    if (!out.empty()) out += ';';
    out += std::to_string(i);
    out += ',';
    out += std::to_string(j);
    out += ':';
    out += std::to_string(k);
  }
  return out;
}

namespace {

int take_int(std::string_view& s, char stop, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p == s.data() || (*s.data() == '0' && p - s.data() > 1))
    throw ParseError("bad configuration entry in '" + std::string(whole) + "'");
  s.remove_prefix(std::size_t(p - s.data()));
  if (stop != '\0') {
    if (s.empty() || s.front() != stop) throw ParseError("expected '" + std::string(1, stop) + "' in configuration");
    s.remove_prefix(1);
  }
  return v;
}

}  // namespace

Configuration Configuration::parse(std::string_view line, int n, bool require_complete) {
  Configuration cfg(n);
  std::string_view rest = line;
  std::pair<int, int> last{-1, -1};
  while (!rest.empty()) {
    auto semi = rest.find(';');
    std::string_view entry = rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view() : rest.substr(semi + 1);
    if (semi != std::string_view::npos && rest.empty()) throw ParseError("trailing ';' in configuration");
    const int i = take_int(entry, ',', line);
    const int j = take_int(entry, ':', line);
    const int k = take_int(entry, '\0', line);
    if (!entry.empty()) throw ParseError("trailing characters in configuration entry");
    if (!is_pair(n, i, j)) throw ParseError("pair " + std::to_string(i) + "," + std::to_string(j) + " is not valid for n=" + std::to_string(n));
    if (std::pair{i, j} <= last) throw ParseError("configuration pairs must be strictly increasing");
    last = {i, j};
    if (k < i || k > j - 1) throw ParseError("kappa outside [i, j-1] for pair " + std::to_string(i) + "," + std::to_string(j));
    cfg.set(i, j, k);
  }
  if (require_complete && !cfg.complete()) throw ParseError("incomplete configuration");
  return cfg;
}

}  // namespace monoap
