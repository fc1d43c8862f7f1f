#pragma once

#include "guekdv/errors.hpp"
#include "guekdv/report.hpp"
#include "guekdv/toda/abstract_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace guekdv::toda {

/// 2x2 matrix [[a, b], [c, d]].
template <class T>
struct Mat2 {
  T a, b, c, d;
};

/// Order-by-order solution of Lambda(R) U - U R = 0, tr R = 1, det R = 0
/// with U = [[v - lambda, w], [-1, 0]] and R = diag(1, 0) + O(1/lambda),
/// over any commutative ring T. Entry k of the result is the coefficient of
/// lambda^{-k}, for k = 0..depth.
///
/// At each order b and c come from the off-diagonal equations, d from the
/// determinant and a from the trace; the (1,1) and (2,2) equations are then
/// re-checked and a failure raises InconsistentSystem.
template <class T, class ShiftFn, class ZeroFn>
std::vector<Mat2<T>> solve_resolvent(int depth, const T& v, const T& w, const T& one, ShiftFn&& shift,
                                     ZeroFn&& is_zero) {
  std::vector<Mat2<T>> r;
  r.reserve(static_cast<std::size_t>(depth) + 1);
  r.push_back({one, T(), T(), T()});
  for (int k = 1; k <= depth; ++k) {
    const Mat2<T>& p = r.back();
    const T A = shift(p.a, 1);
    const T B = shift(p.b, 1);
    const T C = shift(p.c, 1);
    const T D = shift(p.d, 1);
    // M = Lambda(R_{k-1}) U0 - U0 R_{k-1}
    const T m11 = A * v - B - v * p.a - w * p.c;
    const T m12 = A * w - v * p.b - w * p.d;
    const T m21 = C * v - D + p.a;
    const T m22 = C * w + p.b;
    Mat2<T> n;
    n.b = -m12;
    n.c = shift(m21, -1);
    T det;
    for (int q = 1; q < k; ++q) {
      const auto& x = r[static_cast<std::size_t>(q)];
      const auto& y = r[static_cast<std::size_t>(k - q)];
      det = det + x.a * y.d - x.b * y.c;
    }
    n.d = -det;
    n.a = det;
    if (!is_zero(m22)) {
      throw InconsistentSystem("resolvent: (2,2) equation fails at order " + std::to_string(k));
    }
    if (!is_zero(shift(n.a, 1) - n.a - m11)) {
      throw InconsistentSystem("resolvent: (1,1) equation fails at order " + std::to_string(k));
    }
    r.push_back(std::move(n));
  }
  return r;
}

/// Basic matrix resolvent over the lattice ring, to depth K.
struct MatRes {
  int depth = 0;
  std::vector<Mat2<AbstractPoly>> coeffs;
};

MatRes resolvent(int depth);

/// Re-substitutes R into the defining equation and the normalizations.
ResidualReport verify_resolvent(const MatRes& r);

/// Flow pair (D_i v_0, D_i w_0) from [(L^i)_+, L].
struct Flow {
  AbstractPoly v;
  AbstractPoly w;
};

Flow toda_flow(int i, int bound = 4);

/// Volterra flow D_{2j} w_0 from [(L_e^{2j})_+, L_e] with L_e = Lambda + w_0 Lambda^{-1}.
AbstractPoly volterra_flow(int j);

/// Extends a flow to the whole ring by Leibniz and shift equivariance.
AbstractPoly apply_flow(const Flow& f, const AbstractPoly& p);

/// D_i D_j - D_j D_i on v_0 and w_0.
Flow check_flow_commutativity(int i, int j, int bound = 4);

}  // namespace guekdv::toda
