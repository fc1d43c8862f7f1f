#pragma once

#include "guekdv/cli/config.hpp"
#include "guekdv/gue/map_counter.hpp"
#include "guekdv/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace guekdv::cli {

/// Largest 2|j| on the identity grids.
inline constexpr int kIdentityIndexTotal = 12;

struct SuiteArgs {
  Config cfg;
  std::optional<int> h;     ///< identity genus bound
  std::optional<int> n;     ///< identity insertion bound
  std::optional<int> jmax;  ///< largest j entry on identity grids
  std::vector<int> d;       ///< KdV flow numbers
};

std::vector<std::string> suite_names();

/// Runs one verification suite. Map counts go through `counter`.
ResidualReport run_suite(const std::string& name, const SuiteArgs& args, gue::MapCounter& counter);

}  // namespace guekdv::cli
