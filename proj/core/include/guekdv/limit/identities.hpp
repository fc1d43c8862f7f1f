#pragma once

#include "guekdv/gue/map_counter.hpp"
#include "guekdv/rat.hpp"
#include "guekdv/report.hpp"

#include <utility>
#include <vector>

namespace guekdv::limit {

/// Both sides of the per-genus identity for the even couplings s_{2j_1}..s_{2j_n},
/// with Map_g(empty) = 0 and the delta terms carrying the n = 0 content.
std::pair<Rat, Rat> pre_identity_sides(int h, const std::vector<int>& j, gue::MapCounter& counter);
Rat pre_identity_residual(int h, const std::vector<int>& j, gue::MapCounter& counter);

/// Both sides of the simplified five-block identity; needs n >= 1.
std::pair<Rat, Rat> eq56_sides(int h, const std::vector<int>& j, gue::MapCounter& counter);
Rat eq56_residual(int h, const std::vector<int>& j, gue::MapCounter& counter);

/// Sorted j-vectors of length n with entries >= 1 and 2|j| <= index_total.
std::vector<std::vector<int>> j_grid(int n, int index_total);

/// Residuals of both identities on the grid h <= h_max, n <= n_max, 2|j| <= index_total.
/// The five-block identity is skipped for n = 0.
ResidualReport verify_central_identities(int h_max, int n_max, int index_total, gue::MapCounter& counter);

struct IdentityLimitRow {
  Rat kappa;
  std::vector<int> j;
  double lhs_scaled = 0;
  double rhs_scaled = 0;
};

struct IdentityLimitReport {
  int h = 0;
  std::vector<Rat> x;
  /// (2h+n-1)|x|^2 Q_h - |x|^5 Q_{h-1}/24.
  Rat lhs_limit;
  /// sum_{A,B} |x_A|^2 |x_B|^3 Q Q + |x|^5 Q_{h-1}/24.
  Rat rhs_limit;
  std::vector<IdentityLimitRow> rows;
};

/// Both sides of the five-block identity at 2j_a = 2 round(kappa x_a / 2), scaled by
/// 2^{2h-1+3n/2} pi^{n/2} / (sqrt(x_1..x_n) 2^{2|j|} kappa^{3h-1+3n/2}).
IdentityLimitReport limit_of_identity_demo(int h, const std::vector<Rat>& x, const std::vector<Rat>& ladder,
                                           gue::MapCounter& counter);

}  // namespace guekdv::limit
