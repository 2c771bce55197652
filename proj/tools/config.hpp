#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace exotica::cli {

/// Flat key = value parameters for one subcommand. Errors are ConfigError
/// with the field path "<section>.<key>".
class Config {
 public:
  explicit Config(std::string section) : section_(std::move(section)) {}

  /// Parses "key = value" lines; '#' starts a comment.
  void load_text(std::string_view text);
  /// "key=value".
  void set(std::string_view assignment);

  /// ConfigError for any key outside `allowed`.
  void restrict_to(const std::set<std::string>& allowed) const;

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string text(const std::string& key, const std::string& fallback) const;
  double real(const std::string& key, double fallback) const;
  long integer(const std::string& key, long fallback) const;
  /// Comma list or start:stop:step (inclusive of stop up to rounding).
  std::vector<double> grid(const std::string& key, const std::vector<double>& fallback) const;
  std::vector<long> int_grid(const std::string& key, const std::vector<long>& fallback) const;

  std::string path(const std::string& key) const { return section_ + "." + key; }

 private:
  std::string section_;
  std::map<std::string, std::string> values_;
};

/// Grid syntax shared by all numeric lists.
std::vector<double> parse_grid(std::string_view text);

}  // namespace exotica::cli
