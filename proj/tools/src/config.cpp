#include "guekdv/cli/config.hpp"

#include "guekdv/gue/wick.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace guekdv::cli {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int to_int(const std::string& key, const std::string& value) {
  int v = 0;
  const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || p != value.data() + value.size()) {
    throw ParseError(key + ": expected an integer, got '" + value + "'");
  }
  return v;
}

}  // namespace

void Config::set(const std::string& key, const std::string& value) {
  if (key == "g_max") g_max = to_int(key, value);
  else if (key == "n_max") n_max = to_int(key, value);
  else if (key == "i_max") i_max = to_int(key, value);
  else if (key == "s_degree") s_degree = to_int(key, value);
  else if (key == "eps_order") eps_order = to_int(key, value);
  else if (key == "degree") degree = to_int(key, value);
  else if (key == "depth") depth = to_int(key, value);
  else if (key == "wick_bound") wick_bound = to_int(key, value);
  else if (key == "digits") digits = to_int(key, value);
  else if (key == "workers") workers = to_int(key, value);
  else if (key == "cache") cache = value;
  else if (key == "format") format = value;
  else throw ParseError(key + ": unknown config key");
}

void Config::validate() const {
  const std::pair<const char*, int> budgets[] = {{"g_max", g_max},   {"n_max", n_max},       {"i_max", i_max},
                                                 {"s_degree", s_degree}, {"eps_order", eps_order},
                                                 {"degree", degree}, {"depth", depth},       {"wick_bound", wick_bound},
                                                 {"digits", digits}, {"workers", workers}};
  for (const auto& [k, v] : budgets) {
    if (v <= 0) throw ParseError(std::string(k) + ": must be positive");
  }
  if (wick_bound > gue::kWickHardCap) {
    throw ParseError("wick_bound: must not exceed " + std::to_string(gue::kWickHardCap));
  }
  if (digits > 40) throw ParseError("digits: must not exceed 40");
  if (format != "json" && format != "csv" && format != "table") {
    throw ParseError("format: expected json, csv or table, got '" + format + "'");
  }
}

Config Config::parse(std::string_view text, Config base) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected key=value, got '" + t + "'");
    }
    base.set(trim(std::string_view(t).substr(0, eq)), trim(std::string_view(t).substr(eq + 1)));
  }
  base.validate();
  return base;
}

Config Config::load(const std::string& path, Config base) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), std::move(base));
}

Config Config::parse(std::string_view text) { return parse(text, Config{}); }

Config Config::load(const std::string& path) { return load(path, Config{}); }

}  // namespace guekdv::cli
