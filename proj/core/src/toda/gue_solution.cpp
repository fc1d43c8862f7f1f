#include "guekdv/toda/gue_solution.hpp"

#include "guekdv/combinatorics.hpp"
#include "guekdv/gue/free_energy.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>

namespace guekdv::toda {

namespace {

bool series_zero(const SSeries& s) {
  return std::all_of(s.terms().begin(), s.terms().end(), [](const auto& t) { return t.second.is_zero(); });
}

SSeries one_series() { return SSeries::constant(EpsSeries(1), INT_MAX, INT_MAX); }

/// Divides sum_a p[a] t^a u^{s-a} by (u - t), checking the remainder.
std::vector<SSeries> divide_by_difference(const std::vector<SSeries>& p, ResidualReport& rep,
                                          const std::string& label) {
  const int s = static_cast<int>(p.size()) - 1;
  std::vector<SSeries> q(static_cast<std::size_t>(std::max(s, 0)));
  for (int a = 0; a < s; ++a) {
    SSeries acc;
    for (int k = 0; k <= a; ++k) acc += p[static_cast<std::size_t>(a - k)];
    q[static_cast<std::size_t>(a)] = acc;
  }
  SSeries rem;
  for (int a = 0; a <= s; ++a) rem += p[static_cast<std::size_t>(a)];
  rep.record(label + ":remainder", series_zero(rem), "nonzero");
  return q;
}

}  // namespace

SeriesAssignment::SeriesAssignment(SSeries v, SSeries w, int window, int eps_order)
    : v_(std::move(v)), w_(std::move(w)), window_(window), order_(eps_order) {}

SeriesAssignment SeriesAssignment::gue_initial_data(int window, int eps_order) {
  return {SSeries(), SSeries::constant(EpsSeries(XLogPoly::x_pow(1)), INT_MAX, INT_MAX), window, eps_order};
}

const SSeries& SeriesAssignment::value(Symbol s) {
  if (std::abs(s.shift) > window_) {
    throw WindowExceeded("lattice index " + std::to_string(s.shift) + " outside window " + std::to_string(window_));
  }
  auto it = cache_.find(s);
  if (it == cache_.end()) it = cache_.emplace(s, (s.is_w ? w_ : v_).shift(s.shift, order_)).first;
  return it->second;
}

SSeries SeriesAssignment::specialize(const AbstractPoly& p) {
  SSeries r;
  for (const auto& [m, c] : p.terms()) {
    SSeries term = one_series();
    bool zero = false;
    for (const auto& [sym, e] : m) {
      const SSeries& base = value(sym);
      if (base.terms().empty()) {
        zero = true;
        break;
      }
      for (int t = 0; t < e; ++t) term = (term * base).truncated_eps(order_);
    }
    if (!zero) r += term * Rat(c);
  }
  return r;
}

std::vector<Mat2<SSeries>> SeriesAssignment::specialize(const MatRes& r) {
  std::vector<Mat2<SSeries>> out;
  for (const auto& m : r.coeffs) out.push_back({specialize(m.a), specialize(m.b), specialize(m.c), specialize(m.d)});
  return out;
}

GueSolution gue_solution(const SSeries& F, int eps_order) {
  GueSolution s;
  s.F = F;
  s.eps_order = eps_order;
  s.v = F.derivative_s(1).apply(forward_difference(), eps_order - 1).times_eps_pow(1);
  s.w = exp_series(F.apply(second_difference(), eps_order), eps_order);
  return s;
}

ResidualReport verify_initial_data(const GueSolution& s) {
  ResidualReport rep("initial_data");
  const EpsSeries v0 = s.v.constant_term();
  rep.record("v(x,0)", v0.is_zero() && v0.prec() >= s.eps_order, v0.str());
  const EpsSeries w0 = s.w.constant_term() - EpsSeries(XLogPoly::x_pow(1));
  for (int k = 0; k <= s.eps_order; ++k) {
    if (w0.prec() < k) {
      rep.record("w(x,0)-x:eps^" + std::to_string(k), false, "unknown");
      continue;
    }
    const XLogPoly c = w0.coefficient(k);
    rep.record("w(x,0)-x:eps^" + std::to_string(k), c.is_zero(), c.str());
  }
  return rep;
}

std::vector<Mat2<SSeries>> series_resolvent(const GueSolution& s, int depth) {
  const int order = s.eps_order;
  return solve_resolvent(
      depth, s.v, s.w, one_series(), [order](const SSeries& p, int k) { return p.shift(k, order); },
      series_zero);
}

ResidualReport verify_toda_on_gue(const GueSolution& s, int i_max) {
  ResidualReport rep("toda_on_gue");
  const int window = i_max + 1;
  SeriesAssignment assign(s.v, s.w, window, s.eps_order);
  const int deg = std::min(s.v.max_degree(), s.w.max_degree()) - 1;
  const auto mons = gue::window_monomials(deg, s.F.max_index());
  for (int i = 1; i <= std::min(i_max, s.F.max_index()); ++i) {
    const Flow f = toda_flow(i, i_max);
    const SSeries rv = s.v.derivative_s(i).times_eps_pow(1) - assign.specialize(f.v);
    const SSeries rw = s.w.derivative_s(i).times_eps_pow(1) - assign.specialize(f.w);
    gue::record_zero(rep, "flow" + std::to_string(i) + ".v", rv, mons, s.eps_order);
    gue::record_zero(rep, "flow" + std::to_string(i) + ".w", rw, mons, s.eps_order);
  }
  return rep;
}

ResidualReport verify_tau_identities(const GueSolution& s, int pair_max) {
  ResidualReport rep("tau_identities");
  const int I = s.F.max_index();
  const int order = s.eps_order;
  const int pmax = std::min(pair_max, I);
  const int depth = std::max(I + 1, 2 * pmax);
  const auto R = series_resolvent(s, depth);

  // (2,1) entry against eps (Lambda - 1) dF/ds_i, as stated and after one shift of R.
  const auto mons1 = gue::window_monomials(s.v.max_degree(), I);
  const EpsSeries c1 = R[1].c.coefficient({});
  rep.notes["R21.lambda^-1"] = c1.truncated(order).is_zero() ? "0" : c1.coefficient(0).str();
  ResidualReport shifted("R21_shifted");
  for (int i = 1; i <= I; ++i) {
    const SSeries lhs = s.F.derivative_s(i).apply(forward_difference(), order - 1).times_eps_pow(1);
    const SSeries& c = R[static_cast<std::size_t>(i + 1)].c;
    gue::record_zero(rep, "R21.lambda^-" + std::to_string(i + 1), lhs - c, mons1, order);
    gue::record_zero(shifted, "R21.lambda^-" + std::to_string(i + 1), lhs - c.shift(1, order), mons1, order);
  }
  rep.notes["R21_shifted.checked"] = std::to_string(shifted.checked);
  rep.notes["R21_shifted.failures"] = std::to_string(shifted.failures.size());

  // [tr R(lambda) R(mu) - 1]/(lambda - mu)^2 against eps^2 d^2F/ds_i ds_j.
  const auto mons2 = gue::window_monomials(s.F.max_degree() - 2, I);
  auto tr = [&](int k, int l) {
    const auto& A = R[static_cast<std::size_t>(k)];
    const auto& B = R[static_cast<std::size_t>(l)];
    return (A.a * B.a + A.b * B.c + A.c * B.b + A.d * B.d).truncated_eps(order);
  };
  for (int tot = 2; tot <= 2 * pmax; ++tot) {
    std::vector<SSeries> p(static_cast<std::size_t>(tot) + 1);
    for (int a = 0; a <= tot; ++a) p[static_cast<std::size_t>(a)] = tr(a, tot - a);
    const std::string label = "trRR.deg" + std::to_string(tot);
    const auto q2 = divide_by_difference(divide_by_difference(p, rep, label + ".1"), rep, label + ".2");
    for (int i = 1; i <= pmax; ++i) {
      const int j = tot - i;
      if (j < i || j > pmax) continue;
      const SSeries rhs = s.F.derivative_s(i).derivative_s(j).times_eps_pow(2);
      gue::record_zero(rep, "trRR[" + std::to_string(i) + "," + std::to_string(j) + "]",
                       rhs - q2[static_cast<std::size_t>(i - 1)], mons2, order);
    }
  }

  // tau(x+eps) tau(x-eps) / tau(x)^2 = w, with the shifts applied directly.
  const SSeries ratio =
      exp_series((s.F.shift(1, order) + s.F.shift(-1, order) - s.F * Rat(2)).truncated_eps(order), order);
  gue::record_zero(rep, "tau_ratio", ratio - s.w, gue::window_monomials(s.w.max_degree(), I), order);
  return rep;
}

SSeries toda_w_from_initial_data(int max_degree, int max_index, int eps_order) {
  SSeries out(max_degree, max_index);
  SeriesAssignment init =
      SeriesAssignment::gue_initial_data(max_degree * (max_index + 1) + 1, eps_order + max_degree);
  std::vector<Flow> flows;
  for (int i = 1; i <= max_index; ++i) flows.push_back(toda_flow(i, max_index));
  // D^alpha(w_0) for multisets alpha, built by applying one flow at a time.
  std::map<SMonomial, AbstractPoly> level{{SMonomial{}, AbstractPoly::w(0)}};
  for (int d = 0; d <= max_degree; ++d) {
    std::map<SMonomial, AbstractPoly> next;
    for (const auto& [alpha, expr] : level) {
      BigInt sym = 1;
      for (std::size_t a = 0, run = 1; a < alpha.size(); ++a, ++run) {
        if (a + 1 == alpha.size() || alpha[a + 1] != alpha[a]) {
          sym *= factorial(static_cast<unsigned>(run));
          run = 0;
        }
      }
      EpsSeries scale(XLogPoly(Rat(BigInt(1), sym)), -d);
      out.add_term(alpha, (init.specialize(expr).coefficient({}) * scale).truncated(eps_order));
      if (d == max_degree) continue;
      const int lo = alpha.empty() ? 1 : alpha.back();
      for (int i = lo; i <= max_index; ++i) {
        SMonomial up = alpha;
        up.push_back(i);
        next.emplace(up, apply_flow(flows[static_cast<std::size_t>(i - 1)], expr));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace guekdv::toda
