#pragma once

#include "guekdv/gue/index_multiset.hpp"
#include "guekdv/rat.hpp"
#include "guekdv/toda/resolvent.hpp"

#include <climits>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace guekdv::toda {

/// Homogeneous polynomial sum_j c_j eps^j x^{deg-j} in x and eps, keeping
/// eps powers up to a fixed cutoff. This is the coefficient ring of the
/// resolvent on the GUE initial data v_m = 0, w_m = x + m eps.
class XEpsPoly {
 public:
  XEpsPoly() = default;
  /// c * x^deg.
  XEpsPoly(const BigInt& c, int deg, int eps_cutoff);
  /// x + k eps.
  static XEpsPoly shifted_x(int k, int eps_cutoff);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] int degree() const { return deg_; }
  [[nodiscard]] int eps_cutoff() const { return cutoff_; }
  /// Coefficient of eps^j x^{deg-j}.
  [[nodiscard]] BigInt coefficient(int j) const;

  /// f(x + k eps).
  [[nodiscard]] XEpsPoly shifted(int k) const;

  friend XEpsPoly operator+(const XEpsPoly& a, const XEpsPoly& b);
  friend XEpsPoly operator-(const XEpsPoly& a, const XEpsPoly& b);
  friend XEpsPoly operator-(const XEpsPoly& a);
  friend XEpsPoly operator*(const XEpsPoly& a, const XEpsPoly& b);

 private:
  int deg_ = INT_MIN;  // INT_MIN marks the zero polynomial
  int cutoff_ = INT_MAX;
  std::vector<BigInt> c_;
};

/// Resolvent on the GUE initial data to lambda-depth K, eps powers <= cutoff.
std::vector<Mat2<XEpsPoly>> gue_resolvent(int depth, int eps_cutoff);

/// Map_g(i) for 1 <= i <= i_max and 0 <= g <= g_max from the (2,1) entry,
/// keyed by (g, i). Odd i and out-of-range genera give no entries.
std::map<std::pair<int, int>, BigInt> onepoint_correlators_via_resolvent(int i_max, int g_max);

/// Map_g(i, j) for 1 <= i <= j, i <= i_max, j <= j_max from tr R(lambda)R(mu),
/// keyed by (g, i, j).
std::map<std::tuple<int, int, int>, BigInt> twopoint_correlators_via_resolvent(int i_max, int j_max,
                                                                              int g_max);

}  // namespace guekdv::toda
