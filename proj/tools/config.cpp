#include "config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "exotica/errors.hpp"

namespace exotica::cli {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

double to_double(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) throw std::invalid_argument("bad number \"" + s + "\"");
  return v;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> out;
  std::string t = trim(text);
  if (t.find(':') != std::string::npos) {
    auto a = t.find(':');
    auto b = t.find(':', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("range needs start:stop:step");
    double start = to_double(trim(t.substr(0, a)));
    double stop = to_double(trim(t.substr(a + 1, b - a - 1)));
    double step = to_double(trim(t.substr(b + 1)));
    if (step <= 0) throw std::invalid_argument("range step must be positive");
    const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    if (n < 0 || n > 1'000'000) throw std::invalid_argument("range is empty or too long");
    for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::size_t start = 0;
  while (start <= t.size()) {
    auto comma = t.find(',', start);
    if (comma == std::string::npos) comma = t.size();
    out.push_back(to_double(trim(t.substr(start, comma - start))));
    start = comma + 1;
  }
  return out;
}

void Config::load_text(std::string_view text) {
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    if (line.find('=') == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError, section_ + ": line " + std::to_string(line_no) + " is not key = value");
    }
    set(line);
  }
}

void Config::set(std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw Error(ErrorCode::ConfigError, section_ + ": expected key=value");
  std::string key = trim(assignment.substr(0, eq));
  if (key.empty()) throw Error(ErrorCode::ConfigError, section_ + ": empty key");
  values_[key] = trim(assignment.substr(eq + 1));
}

void Config::restrict_to(const std::set<std::string>& allowed) const {
  for (const auto& [k, v] : values_) {
    if (!allowed.count(k)) throw Error(ErrorCode::ConfigError, path(k) + ": unknown field");
  }
}

std::string Config::text(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double Config::real(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return to_double(it->second);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ConfigError, path(key) + ": " + e.what());
  }
}

long Config::integer(const std::string& key, long fallback) const {
  double v = real(key, static_cast<double>(fallback));
  if (v != std::floor(v)) throw Error(ErrorCode::ConfigError, path(key) + ": expected an integer");
  return static_cast<long>(v);
}

std::vector<double> Config::grid(const std::string& key, const std::vector<double>& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return parse_grid(it->second);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ConfigError, path(key) + ": " + e.what());
  }
}

std::vector<long> Config::int_grid(const std::string& key, const std::vector<long>& fallback) const {
  if (!has(key)) return fallback;
  std::vector<long> out;
  for (double v : grid(key, {})) {
    if (v != std::floor(v)) throw Error(ErrorCode::ConfigError, path(key) + ": expected integers");
    out.push_back(static_cast<long>(v));
  }
  return out;
}

}  // namespace exotica::cli
