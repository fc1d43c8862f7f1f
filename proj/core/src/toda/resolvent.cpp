#include "guekdv/toda/resolvent.hpp"

#include <set>

namespace guekdv::toda {

MatRes resolvent(int depth) {
  if (depth < 0) throw Error("resolvent: depth must be >= 0");
  MatRes r;
  r.depth = depth;
  r.coeffs = solve_resolvent(
      depth, AbstractPoly::v(0), AbstractPoly::w(0), AbstractPoly(1),
      [](const AbstractPoly& p, int k) { return p.shifted(k); },
      [](const AbstractPoly& p) { return p.is_zero(); });
  return r;
}

ResidualReport verify_resolvent(const MatRes& r) {
  ResidualReport rep("resolvent");
  const auto& R = r.coeffs;
  const AbstractPoly v = AbstractPoly::v(0);
  const AbstractPoly w = AbstractPoly::w(0);
  auto at = [&](int k) -> const Mat2<AbstractPoly>& { return R[static_cast<std::size_t>(k)]; };
  rep.record("R0", at(0).a == AbstractPoly(1) && at(0).b.is_zero() && at(0).c.is_zero() && at(0).d.is_zero(), "");
  for (int k = 0; k <= r.depth; ++k) {
    const std::string o = std::to_string(k);
    const AbstractPoly tr = at(k).a + at(k).d - AbstractPoly(k == 0 ? 1 : 0);
    rep.record("trace:" + o, tr.is_zero(), tr.str());
    AbstractPoly det;
    for (int q = 0; q <= k; ++q) det += at(q).a * at(k - q).d - at(q).b * at(k - q).c;
    rep.record("det:" + o, det.is_zero(), det.str());
  }
  // Coefficient of lambda^{1-k} in Lambda(R)U - UR, for k = 1..depth.
  for (int k = 1; k <= r.depth; ++k) {
    const auto& p = at(k - 1);
    const auto& n = at(k);
    Mat2<AbstractPoly> lam{p.a.shifted(1), p.b.shifted(1), p.c.shifted(1), p.d.shifted(1)};
    Mat2<AbstractPoly> nl{n.a.shifted(1), n.b.shifted(1), n.c.shifted(1), n.d.shifted(1)};
    // Lambda(R_{k-1}) U0 - U0 R_{k-1} - (Lambda(R_k) E - E R_k)
    const AbstractPoly e11 = lam.a * v - lam.b - v * p.a - w * p.c - (nl.a - n.a);
    const AbstractPoly e12 = lam.a * w - v * p.b - w * p.d + n.b;
    const AbstractPoly e21 = lam.c * v - lam.d + p.a - nl.c;
    const AbstractPoly e22 = lam.c * w + p.b;
    const std::string o = std::to_string(1 - k);
    rep.record("eq11:" + o, e11.is_zero(), e11.str());
    rep.record("eq12:" + o, e12.is_zero(), e12.str());
    rep.record("eq21:" + o, e21.is_zero(), e21.str());
    rep.record("eq22:" + o, e22.is_zero(), e22.str());
  }
  return rep;
}

Flow toda_flow(int i, int bound) {
  if (i < 1 || i > bound) throw BoundExceeded("toda_flow: i must lie in [1, " + std::to_string(bound) + "]");
  const LatticeOp L = LatticeOp::toda_lax();
  const LatticeOp P = L.pow(static_cast<unsigned>(i)).positive_part();
  const LatticeOp c = P * L - L * P;
  for (const auto& [m, coeff] : c.terms()) {
    if (m != 0 && m != -1) {
      throw SupportViolation("toda_flow: commutator has shift degree " + std::to_string(m));
    }
  }
  return {c.coefficient(0), c.coefficient(-1)};
}

AbstractPoly volterra_flow(int j) {
  if (j < 1) throw Error("volterra_flow: j must be >= 1");
  const LatticeOp L = LatticeOp::volterra_lax();
  const LatticeOp P = L.pow(static_cast<unsigned>(2 * j)).positive_part();
  const LatticeOp c = P * L - L * P;
  for (const auto& [m, coeff] : c.terms()) {
    if (m != -1) throw SupportViolation("volterra_flow: commutator has shift degree " + std::to_string(m));
  }
  return c.coefficient(-1);
}

AbstractPoly apply_flow(const Flow& f, const AbstractPoly& p) {
  std::set<Symbol> syms;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [s, e] : m) syms.insert(s);
  }
  AbstractPoly r;
  for (const Symbol& s : syms) {
    const AbstractPoly& base = s.is_w ? f.w : f.v;
    r += p.derivative(s) * base.shifted(s.shift);
  }
  return r;
}

Flow check_flow_commutativity(int i, int j, int bound) {
  const Flow fi = toda_flow(i, bound);
  const Flow fj = toda_flow(j, bound);
  return {apply_flow(fi, fj.v) - apply_flow(fj, fi.v), apply_flow(fi, fj.w) - apply_flow(fj, fi.w)};
}

}  // namespace guekdv::toda
