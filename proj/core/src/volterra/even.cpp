#include "guekdv/volterra/even.hpp"

#include "guekdv/combinatorics.hpp"
#include "guekdv/errors.hpp"
#include "guekdv/toda/gue_solution.hpp"

#include <algorithm>
#include <climits>

namespace guekdv::volterra {

namespace {

bool is_even(int i) { return i % 2 == 0; }

/// Checks every eps^k coefficient of `r` on the even monomials of its window.
void check(ResidualReport& rep, const std::string& label, const SSeries& r, const SSeries& ref, int order) {
  const int deg = std::min(r.max_degree(), ref.max_degree());
  const int idx = std::min(r.max_index(), ref.max_index());
  gue::record_zero(rep, label, r, gue::window_monomials(deg, idx, true), order);
}

SSeries x_series(int p) { return SSeries::constant(EpsSeries(XLogPoly::x_pow(p)), INT_MAX, INT_MAX); }

SSeries dx_pow(SSeries f, int k) {
  for (int t = 0; t < k; ++t) f = f.derivative_x();
  return f;
}

/// (2^{2g+3} - 2) B_{2g+2} / (2g+2)!
Rat tanh_coefficient(int g) {
  const Rat c = Rat(BigInt((BigInt(1) << static_cast<unsigned>(2 * g + 3)) - 2)) * bernoulli(static_cast<unsigned>(2 * g + 2));
  return c / Rat(factorial(static_cast<unsigned>(2 * g + 2)));
}

/// [eps^{2g-2}] F moved to eps^0.
SSeries genus_slice(const SSeries& F, int g) {
  if (g < 0) throw Error("genus_slice: negative genus " + std::to_string(g));
  return F.eps_slice(2 * g - 2);
}

}  // namespace

SSeries even_free_energy(const gue::GueFreeEnergyParams& p, gue::MapCounter& counter) {
  return gue::assemble_gue_free_energy(p, counter).set_couplings_zero(is_even);
}

EvenSolution even_solution(const SSeries& F_even, int eps_order) {
  EvenSolution s;
  s.F = F_even;
  s.eps_order = eps_order;
  s.w = exp_series(F_even.apply(second_difference(), eps_order), eps_order);
  return s;
}

ResidualReport verify_v_vanishes(const SSeries& F, int eps_order) {
  ResidualReport rep("v_even");
  const SSeries v =
      F.derivative_s(1).apply(forward_difference(), eps_order - 1).times_eps_pow(1).set_couplings_zero(is_even);
  check(rep, "v", v, v, eps_order);
  return rep;
}

ResidualReport verify_volterra(const EvenSolution& s) {
  ResidualReport rep("volterra");
  const int order = s.eps_order;
  const SSeries lhs = s.w.derivative_s(2).times_eps_pow(1);
  const SSeries rhs = (s.w * (s.w.shift(1, order) - s.w.shift(-1, order))).truncated_eps(order);
  check(rep, "w", lhs - rhs, lhs, order);
  return rep;
}

ResidualReport verify_volterra_hierarchy(const EvenSolution& s, int j) {
  if (j < 1 || j > 2) throw BoundExceeded("verify_volterra_hierarchy: j must be 1 or 2");
  ResidualReport rep("volterra_hierarchy.j" + std::to_string(j));
  const int order = s.eps_order;
  toda::SeriesAssignment assign(SSeries(), s.w, 2 * j + 1, order);
  const SSeries lhs = s.w.derivative_s(2 * j).times_eps_pow(1);
  check(rep, "w", lhs - assign.specialize(toda::volterra_flow(j)), lhs, order);
  return rep;
}

ResidualReport verify_feg_identities(const EvenSolution& s, int h_max) {
  ResidualReport rep("feg_identities");
  const int order = s.eps_order;
  const EpsDiffOperator T = tanh_half();
  const EpsDiffOperator D2 = second_difference();
  const SSeries& F = s.F;
  const SSeries F2 = F.derivative_s(2);
  const SSeries TF2 = F2.apply(T, order);

  check(rep, "w.tanh_form", TF2 - s.w, TF2, order);
  const SSeries lhs1 = F2.derivative_x().apply(T, order);
  const SSeries dxF = F.derivative_x();
  const SSeries D2dxF = dxF.apply(D2, order);
  check(rep, "dx.tanh_form", lhs1 - (TF2 * D2dxF).truncated_eps(order), lhs1, order);
  const SSeries e = exp_series(F.apply(D2, order), order);
  check(rep, "w.exp_form", TF2 - e, TF2, order);
  // d_x of the exponential form, rewritten through itself.
  check(rep, "w.exp_form.dx", e.derivative_x() - (e * D2dxF).truncated_eps(order), e, order);

  const SSeries Fn = F.without_constant();
  const SSeries F0 = SSeries::constant(F.constant_term(), F.max_degree(), F.max_index());
  // The coupling-free part contributes exactly 1/x.
  check(rep, "const.1/x", F0.derivative_x().apply(D2, order) - x_series(-1), F0, order);
  const SSeries Fn2 = Fn.derivative_s(2);
  const SSeries TFn2 = Fn2.apply(T, order);
  const SSeries lhsn = Fn2.derivative_x().apply(T, order);
  const SSeries rhsn = (TFn2 * (x_series(-1) + Fn.derivative_x().apply(D2, order))).truncated_eps(order);
  check(rep, "dx.tanh_form.norm", lhsn - rhsn, lhsn, order);
  check(rep, "dx.tanh_form.norm_vs_full", (lhsn - rhsn) - (lhs1 - (TF2 * D2dxF).truncated_eps(order)), lhsn, order);

  // Genus slices F^norm_g = [eps^{2g-2}] F^norm, compared at every eps^{2h}.
  const int h_top = std::min(h_max, order / 2);
  std::vector<SSeries> Fg;
  std::vector<SSeries> Fg2;
  for (int g = 0; g <= h_top; ++g) {
    Fg.push_back(genus_slice(Fn, g));
    Fg2.push_back(Fg.back().derivative_s(2));
  }
  const auto at = [](const std::vector<SSeries>& v, int g) -> const SSeries& {
    return v[static_cast<std::size_t>(g)];
  };
  for (int h = 0; h <= h_top; ++h) {
    SSeries lhs;
    for (int g = 0; g <= h; ++g) lhs += dx_pow(at(Fg2, h - g), 2 * g + 2) * tanh_coefficient(g);
    SSeries rhs;
    for (int g1 = 0; g1 <= h; ++g1) {
      for (int g1p = 0; g1 + g1p <= h; ++g1p) {
        const SSeries left = dx_pow(at(Fg2, g1p), 2 * g1 + 1) * tanh_coefficient(g1);
        SSeries right;
        for (int g2 = 0; g1 + g1p + g2 <= h; ++g2) {
          const int g2p = h - g1 - g1p - g2;
          right += dx_pow(at(Fg, g2p), 2 * g2 + 3) * (Rat(2) / Rat(factorial(static_cast<unsigned>(2 * g2 + 2))));
          if (g2 == 0 && g2p == 0) right += x_series(-1);
        }
        rhs += left * right;
      }
    }
    check(rep, "genus_identity.h" + std::to_string(h), (lhs - rhs).truncated_eps(0), lhs, 0);
  }
  return rep;
}

}  // namespace guekdv::volterra
