#pragma once

#include "guekdv/homog_poly.hpp"
#include "guekdv/report.hpp"

#include <vector>

namespace guekdv::witten {

struct WittenOptions {
  int g_max = 3;
  int n_max = 4;
};

/// Psi-class correlator key: genus and sorted exponents.
struct PsiCorrelator {
  int g = 0;
  std::vector<int> d;
  Rat value;
};

/// Q_g(x_1..x_n) = sum_d <tau_{d_1}..tau_{d_n}>_g x^d for 2g-2+n > 0, from
/// the quadratic recursion divided by (2g+n-1)|x|^2. Memoized; throws
/// BoundExceeded outside the budget.
const HomogPoly& q_polynomial(int g, int n, const WittenOptions& opt = {});

/// Coefficient of x^d in q_polynomial(g, |d|), without any reduction.
Rat correlator_from_q(int g, std::vector<int> d, const WittenOptions& opt = {});

/// <tau_{d_1}..tau_{d_n}>_g; zero off the dimension and in the unstable range.
/// Entries 0 and 1 are removed by the string and dilaton equations before the
/// n-point function is consulted.
Rat intersection_number(int g, std::vector<int> d, const WittenOptions& opt = {});

/// Sorted exponent multisets of length n with sum 3g-3+n.
std::vector<std::vector<int>> dimension_keys(int g, int n);

/// String and dilaton equations on every correlator with g <= g_max and
/// n + 1 <= n_max, read directly from the n-point functions.
ResidualReport verify_string_dilaton(const WittenOptions& opt = {});

/// Q_g(x_I, 0, ..., 0) - |x_I|^s Q_g(x_I) with s trailing zeros.
ResidualReport verify_stringQ(int g, int n, int s, const WittenOptions& opt = {});

/// The cubic-power form of the recursion, (2g+n-1)|x_I| Q_g = |x_I|^4/12 Q_{g-1} + ...
ResidualReport lx_crosscheck(int g, int n, const WittenOptions& opt = {});

/// <tau_1 tau_0^2 tau_{d_I}>_g = 1/12 <tau_0^5 tau_{d_I}>_{g-1}
///   + sum <tau_0^2 tau_{d_A}>_{g_1} <tau_0^3 tau_{d_B}>_{g_2} for |I| <= n_max.
ResidualReport verify_kdv_relation(int g_max, int n_max, const WittenOptions& opt = {});

}  // namespace guekdv::witten
