#include "guekdv/gue/free_energy.hpp"

#include "guekdv/combinatorics.hpp"
#include "guekdv/errors.hpp"
#include "guekdv/gue/index_multiset.hpp"

#include <algorithm>
#include <functional>

namespace guekdv::gue {

EpsSeries gue_free_energy_constant(int g_max, int eps_order) {
  EpsSeries f;
  f.add_term(-2, XLogPoly::monomial(Rat(1, 2), 2, 1) - XLogPoly::monomial(Rat(3, 4), 2));
  if (g_max >= 1) f.add_term(0, XLogPoly::monomial(Rat(-1, 12), 0, 1) + XLogPoly::zeta_prime());
  int top = std::min(g_max, eps_order == EpsSeries::kExact ? INT_MAX : eps_order / 2 + 1);
  if (top == INT_MAX) throw TruncationMismatch("gue_free_energy_constant: needs a finite genus or eps order");
  for (int g = 2; g <= top; ++g) {
    f.add_term(2 * g - 2, XLogPoly::monomial(bernoulli(static_cast<unsigned>(2 * g)) /
                                                 Rat(static_cast<long>(4 * g * (g - 1))),
                                             2 - 2 * g));
  }
  // The first omitted genus starts at eps^{2 top}.
  return f.truncated(std::min(2 * std::max(top, 0) - 1, eps_order));
}

std::vector<SMonomial> window_monomials(int max_degree, int max_index, bool even_only) {
  std::vector<SMonomial> out{{}};
  SMonomial cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == max_degree) return;
    for (int v = lo; v <= max_index; ++v) {
      if (even_only && v % 2 != 0) continue;
      cur.push_back(v);
      out.push_back(cur);
      rec(v);
      cur.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

void record_zero(ResidualReport& rep, const std::string& label, const SSeries& r,
                 const std::vector<SMonomial>& monomials, int eps_order) {
  for (const SMonomial& m : monomials) {
    const EpsSeries c = r.coefficient(m);
    const std::string key = label + "[" + monomial_key(m) + "]";
    if (c.prec() < eps_order) {
      rep.record(key, false, "known only to eps^" + std::to_string(c.prec()));
      continue;
    }
    const EpsSeries low = c.truncated(eps_order);
    rep.record(key, low.is_zero(), low.str());
  }
}

SSeries assemble_gue_free_energy(const GueFreeEnergyParams& p, MapCounter& counter) {
  SSeries F(p.n_max, p.i_max);
  const int eps_cap = p.eps_order;
  for (const IndexMultiset& i : enumerate_multisets(p.n_max, p.i_max, p.n_max * p.i_max)) {
    if (i.total() % 2 != 0) continue;
    BigInt sym = 1;
    for (std::size_t a = 0, run = 1; a < i.values().size(); ++a, ++run) {
      if (a + 1 == i.values().size() || i.values()[a + 1] != i.values()[a]) {
        sym *= factorial(static_cast<unsigned>(run));
        run = 0;
      }
    }
    EpsSeries c;
    bool dropped = false;
    for (int g = 0; g <= i.max_genus(); ++g) {
      if (g > p.g_max || (eps_cap != EpsSeries::kExact && 2 * g - 2 > eps_cap)) {
        dropped = true;
        break;
      }
      const BigInt m = counter.count(g, i);
      if (m != 0) c.add_term(2 * g - 2, XLogPoly::monomial(Rat(m, sym), i.n_exponent(g)));
    }
    if (dropped) {
      c = c.truncated(std::min(p.g_max == INT_MAX ? INT_MAX : 2 * p.g_max - 1, eps_cap));
    }
    F.add_term(i.values(), c);
  }
  F.add_term({}, gue_free_energy_constant(p.g_max, p.eps_order));
  return F;
}

ResidualReport verify_gue_pdes(const SSeries& F, int eps_order) {
  ResidualReport rep("gue_pdes");
  const SSeries Zhat = exp_series(F.without_constant(), EpsSeries::kExact);
  const int I = F.max_index();
  const EpsSeries x_over_eps2(XLogPoly::x_pow(1), -2);
  const EpsSeries x2_over_eps2(XLogPoly::x_pow(2), -2);

  SSeries string_r = -Zhat.derivative_s(1) + (Zhat * x_over_eps2).times_coupling(1);
  for (int i = 2; i <= I; ++i) string_r += Zhat.derivative_s(i - 1).times_coupling(i) * Rat(i);

  SSeries scaling_r = (I >= 2 ? -Zhat.derivative_s(2) : SSeries()) + Zhat * x2_over_eps2;
  for (int i = 1; i <= I; ++i) scaling_r += Zhat.derivative_s(i).times_coupling(i) * Rat(i);

  const auto mons = window_monomials(F.max_degree() - 1, I);
  record_zero(rep, "string", string_r, mons, eps_order);
  record_zero(rep, "scaling", scaling_r, mons, eps_order);
  return rep;
}

}  // namespace guekdv::gue
