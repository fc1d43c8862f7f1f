#pragma once

#include "guekdv/errors.hpp"

#include <string>
#include <string_view>

namespace guekdv::cli {

/// Bad command-line input; `flag` names the offending flag or config key.
class UsageError : public Error {
 public:
  UsageError(std::string flag, const std::string& what) : Error(flag + ": " + what), flag_(std::move(flag)) {}
  [[nodiscard]] const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

/// Truncation budgets and output settings. Keys in the config file use the
/// member names.
struct Config {
  int g_max = 3;       ///< Witten genus budget
  int n_max = 4;       ///< Witten insertion budget
  int i_max = 8;       ///< GUE coupling index
  int s_degree = 3;    ///< GUE coupling degree
  int eps_order = 6;   ///< eps order of GUE series checks
  int degree = 6;      ///< Witten t-degree
  int depth = 12;      ///< resolvent lambda-depth
  int wick_bound = 16; ///< largest |i| enumerated by matchings
  std::string cache;
  std::string format = "json";
  int digits = 17;
  int workers = 1;

  /// Assigns one key; unknown keys and bad values raise ParseError naming the key.
  void set(const std::string& key, const std::string& value);
  /// Budgets positive, wick_bound <= 20, format known.
  void validate() const;

  /// Flat key=value text; '#' starts a comment, blank lines are skipped.
  static Config parse(std::string_view text, Config base);
  static Config load(const std::string& path, Config base);
  static Config parse(std::string_view text);
  static Config load(const std::string& path);
};

}  // namespace guekdv::cli
