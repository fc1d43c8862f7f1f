#pragma once

#include "guekdv/report.hpp"
#include "guekdv/s_series.hpp"
#include "guekdv/toda/resolvent.hpp"

#include <map>
#include <vector>

namespace guekdv::toda {

/// Substitution v_m -> Lambda^m v, w_m -> Lambda^m w into lattice expressions,
/// with Lambda^m realized as a Taylor shift. Indices with |m| > window raise
/// WindowExceeded.
class SeriesAssignment {
 public:
  SeriesAssignment(SSeries v, SSeries w, int window, int eps_order);

  /// v_m -> 0, w_m -> x + m eps.
  static SeriesAssignment gue_initial_data(int window, int eps_order);

  const SSeries& value(Symbol s);
  SSeries specialize(const AbstractPoly& p);
  std::vector<Mat2<SSeries>> specialize(const MatRes& r);

  [[nodiscard]] int eps_order() const { return order_; }

 private:
  SSeries v_, w_;
  int window_;
  int order_;
  std::map<Symbol, SSeries> cache_;
};

/// v = eps (Lambda - 1) dF/ds_1 and w = exp((Lambda - 1)(1 - Lambda^{-1}) F).
struct GueSolution {
  SSeries F;
  SSeries v;
  SSeries w;
  int eps_order = 0;
};

GueSolution gue_solution(const SSeries& F, int eps_order);

/// v(x, 0) = 0 and w(x, 0) = x through eps^eps_order.
ResidualReport verify_initial_data(const GueSolution& s);

/// Resolvent of the solution to lambda-depth K, solved directly over the
/// coupling series ring.
std::vector<Mat2<SSeries>> series_resolvent(const GueSolution& s, int depth);

/// Flows i = 1..i_max checked as eps dv/ds_i = D_i(v_0), eps dw/ds_i = D_i(w_0).
ResidualReport verify_toda_on_gue(const GueSolution& s, int i_max);

/// Tau-function identities with tau = exp(F); two-point coefficients for
/// i, j <= pair_max. The (2,1)-entry identity is checked for lambda^{-i-1},
/// i >= 1, exactly as stated; notes carry the lambda^{-1} coefficient and
/// the residual count of the same identity with R_21 replaced by Lambda(R_21).
ResidualReport verify_tau_identities(const GueSolution& s, int pair_max = 5);

/// w built only from the Toda flows and the initial data (v, w) = (0, x),
/// as sum_alpha s^alpha / alpha! eps^{-|alpha|} D^alpha(w_0) at the initial data.
SSeries toda_w_from_initial_data(int max_degree, int max_index, int eps_order);

}  // namespace guekdv::toda
