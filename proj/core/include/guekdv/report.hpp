#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace guekdv {

/// Outcome of a coefficientwise identity check.
struct ResidualReport {
  struct Failure {
    std::string key;
    std::string value;
  };

  std::string name;
  std::size_t checked = 0;
  std::vector<Failure> failures;
  /// Free-form named values reported next to the residuals.
  std::map<std::string, std::string> notes;

  ResidualReport() = default;
  explicit ResidualReport(std::string n) : name(std::move(n)) {}

  [[nodiscard]] bool ok() const { return failures.empty(); }

  /// Records one checked coefficient; `value` is kept only when nonzero.
  void record(const std::string& key, bool zero, const std::string& value) {
    ++checked;
    if (!zero) failures.push_back({key, value});
  }

  /// Appends another report's checks, prefixing its failure keys.
  void absorb(const ResidualReport& other) {
    checked += other.checked;
    for (const auto& f : other.failures) failures.push_back({other.name + ":" + f.key, f.value});
    for (const auto& [k, v] : other.notes) notes[other.name + ":" + k] = v;
  }
};

}  // namespace guekdv
