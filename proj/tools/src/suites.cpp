#include "guekdv/cli/suites.hpp"

#include "guekdv/errors.hpp"
#include "guekdv/gue/free_energy.hpp"
#include "guekdv/gue/wick.hpp"
#include "guekdv/homog_poly.hpp"
#include "guekdv/kdv/pdo.hpp"
#include "guekdv/kdv/witten_kdv.hpp"
#include "guekdv/limit/identities.hpp"
#include "guekdv/parallel.hpp"
#include "guekdv/toda/gue_resolvent.hpp"
#include "guekdv/toda/gue_solution.hpp"
#include "guekdv/toda/resolvent.hpp"
#include "guekdv/volterra/even.hpp"
#include "guekdv/witten/free_energy.hpp"
#include "guekdv/witten/npoint.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>

namespace guekdv::cli {
namespace {

using gue::IndexMultiset;

void record_equal(ResidualReport& rep, const std::string& key, const BigInt& a, const BigInt& b) {
  rep.record(key, a == b, a.get_str() + " vs " + b.get_str());
}

void record_equal(ResidualReport& rep, const std::string& key, const Rat& a, const Rat& b) {
  rep.record(key, a == b, a.str() + " vs " + b.str());
}

gue::WickOptions wick(const Config& c) { return {c.wick_bound}; }

ResidualReport closed_forms(const SuiteArgs& a, gue::MapCounter&) {
  ResidualReport rep("closed-forms");
  for (int j = 1; j <= 7; ++j) {
    record_equal(rep, "catalan[" + std::to_string(j) + "]", gue::map_count(0, IndexMultiset{2 * j}, wick(a.cfg)),
                 gue::catalan_onepoint(j));
  }
  std::vector<IndexMultiset> pairs;
  for (int i1 = 1; i1 <= 11; ++i1) {
    for (int i2 = i1; i1 + i2 <= 12; ++i2) {
      if (i1 % 2 == i2 % 2) pairs.push_back(IndexMultiset{i1, i2});
    }
  }
  const auto oracle = parallel_map<BigInt>(pairs.size(), [&](std::size_t k) {
    return gue::map_count(0, pairs[k], wick(a.cfg));
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const IndexMultiset& p = pairs[k];
    const bool even = p[0] % 2 == 0;
    const BigInt closed = even ? gue::genus0_twopoint(p[0] / 2, p[1] / 2, gue::Parity::Even)
                               : gue::genus0_twopoint((p[0] + 1) / 2, (p[1] + 1) / 2, gue::Parity::Odd);
    record_equal(rep, std::string(even ? "twopoint.even[" : "twopoint.odd[") + p.key() + "]", oracle[k], closed);
  }
  return rep;
}

ResidualReport dilation(const SuiteArgs& a, gue::MapCounter&) {
  ResidualReport rep("dilation");
  const int total = std::min(12, a.cfg.wick_bound - 2);
  struct Task {
    int g;
    IndexMultiset i;
  };
  std::vector<Task> tasks;
  for (const auto& i : gue::enumerate_multisets(total, total, total)) {
    if (i.total() % 2 != 0) continue;
    for (int g = 0; g <= i.with(2).max_genus(); ++g) tasks.push_back({g, i});
  }
  const gue::WickOptions opts{total + 2};
  const auto res = parallel_map<BigInt>(tasks.size(), [&](std::size_t k) {
    return gue::check_dilation(tasks[k].g, tasks[k].i, opts);
  });
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    rep.record("g=" + std::to_string(tasks[k].g) + ";i=" + tasks[k].i.key(), res[k] == 0, res[k].get_str());
  }
  rep.notes["max_total"] = std::to_string(total);
  return rep;
}

SSeries gue_f(const Config& c, int eps_order, gue::MapCounter& counter) {
  return gue::assemble_gue_free_energy({INT_MAX, c.s_degree, c.i_max, eps_order}, counter);
}

ResidualReport pdes(const SuiteArgs& a, gue::MapCounter& counter) {
  ResidualReport rep = gue::verify_gue_pdes(gue_f(a.cfg, 2 * a.cfg.eps_order + 8, counter), a.cfg.eps_order);
  rep.name = "pdes";
  return rep;
}

ResidualReport resolvent(const SuiteArgs& a, gue::MapCounter&) {
  ResidualReport rep("resolvent");
  rep.absorb(toda::verify_resolvent(toda::resolvent(a.cfg.depth)));
  const int one_max = 14;
  const auto one = toda::onepoint_correlators_via_resolvent(one_max, one_max / 2);
  std::vector<std::pair<int, IndexMultiset>> keys;
  for (int i = 2; i <= one_max; i += 2) {
    for (int g = 0; g <= IndexMultiset{i}.max_genus(); ++g) keys.emplace_back(g, IndexMultiset{i});
  }
  const int two_total = 12;
  const auto two = toda::twopoint_correlators_via_resolvent(two_total - 1, two_total - 1, two_total / 4 + 1);
  for (int i1 = 1; i1 < two_total; ++i1) {
    for (int i2 = i1; i1 + i2 <= two_total; ++i2) {
      if ((i1 + i2) % 2 != 0) continue;
      const IndexMultiset p{i1, i2};
      for (int g = 0; g <= p.max_genus(); ++g) keys.emplace_back(g, p);
    }
  }
  const gue::WickOptions opts{gue::kWickHardCap};
  const auto oracle = parallel_map<BigInt>(keys.size(), [&](std::size_t k) {
    return gue::map_count(keys[k].first, keys[k].second, opts);
  });
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const auto& [g, i] = keys[k];
    BigInt via = 0;
    if (i.size() == 1) {
      const auto it = one.find({g, i[0]});
      via = it == one.end() ? BigInt(0) : it->second;
    } else {
      const auto it = two.find({g, i[0], i[1]});
      via = it == two.end() ? BigInt(0) : it->second;
    }
    record_equal(rep, std::string(i.size() == 1 ? "onepoint" : "twopoint") + "[g=" + std::to_string(g) +
                          ";i=" + i.key() + "]",
                 via, oracle[k]);
  }
  return rep;
}

toda::GueSolution toda_solution(const Config& c, int eps_order, gue::MapCounter& counter) {
  return toda::gue_solution(gue_f(c, 2 * eps_order, counter), eps_order);
}

ResidualReport toda_suite(const SuiteArgs& a, gue::MapCounter& counter) {
  ResidualReport rep("toda");
  const toda::GueSolution s = toda_solution(a.cfg, a.cfg.eps_order, counter);
  rep.absorb(toda::verify_toda_on_gue(s, a.cfg.i_max));
  rep.absorb(toda::verify_tau_identities(s, 3));
  return rep;
}

ResidualReport initial(const SuiteArgs& a, gue::MapCounter& counter) {
  const int order = std::max(10, a.cfg.eps_order);
  ResidualReport rep = toda::verify_initial_data(toda_solution(a.cfg, order, counter));
  rep.name = "initial";
  rep.notes["eps_order"] = std::to_string(order);
  return rep;
}

ResidualReport volterra_suite(const SuiteArgs& a, gue::MapCounter& counter) {
  ResidualReport rep("volterra");
  const int order = a.cfg.eps_order;
  const SSeries full = gue_f(a.cfg, 2 * order, counter);
  rep.absorb(volterra::verify_v_vanishes(full, order));
  const auto s = volterra::even_solution(full.set_couplings_zero([](int i) { return i % 2 == 0; }), order);
  rep.absorb(volterra::verify_volterra(s));
  rep.absorb(volterra::verify_volterra_hierarchy(s, 2));
  return rep;
}

ResidualReport feg(const SuiteArgs& a, gue::MapCounter& counter) {
  const int order = std::max(8, a.cfg.eps_order);
  const auto s = volterra::even_solution(
      volterra::even_free_energy({INT_MAX, a.cfg.s_degree, std::max(6, a.cfg.i_max), 2 * order}, counter), order);
  ResidualReport rep = volterra::verify_feg_identities(s, a.h.value_or(2));
  rep.name = "feg";
  return rep;
}

std::string j_key(const std::string& name, int h, const std::vector<int>& j) {
  std::string key = name + "[h=" + std::to_string(h) + ";j=";
  for (std::size_t t = 0; t < j.size(); ++t) key += (t ? "," : "") + std::to_string(j[t]);
  return key + "]";
}

ResidualReport identity_grid(const std::string& name, bool five_block, int h_default, int n_default,
                             const SuiteArgs& a, gue::MapCounter& counter) {
  ResidualReport rep(name);
  const int h_max = a.h.value_or(h_default);
  const int n_max = a.n.value_or(n_default);
  const int jmax = a.jmax.value_or(kIdentityIndexTotal / 2);
  if (h_max < 0) throw UsageError("--h", "must be nonnegative");
  if (n_max < 0) throw UsageError("--n", "must be nonnegative");
  if (jmax < 1) throw UsageError("--jmax", "must be positive");
  struct Task {
    int h;
    std::vector<int> j;
  };
  std::vector<Task> tasks;
  for (int h = 0; h <= h_max; ++h) {
    for (int n = five_block ? 1 : 0; n <= n_max; ++n) {
      for (auto& j : limit::j_grid(n, kIdentityIndexTotal)) {
        if (j.empty() || j.back() <= jmax) tasks.push_back({h, std::move(j)});
      }
    }
  }
  const auto res = parallel_map<Rat>(tasks.size(), [&](std::size_t k) {
    return five_block ? limit::eq56_residual(tasks[k].h, tasks[k].j, counter)
                      : limit::pre_identity_residual(tasks[k].h, tasks[k].j, counter);
  });
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    rep.record(j_key(five_block ? "eq56" : "pre", tasks[k].h, tasks[k].j), res[k].is_zero(), res[k].str());
  }
  return rep;
}

ResidualReport central(const SuiteArgs& a, gue::MapCounter& counter) {
  ResidualReport rep("central");
  SuiteArgs zero = a;
  zero.h = 3;
  zero.n = 0;
  ResidualReport r0 = identity_grid("pre.n0", false, 3, 0, zero, counter);
  rep.absorb(r0);
  rep.absorb(identity_grid("pre", false, 1, 2, a, counter));
  rep.absorb(identity_grid("eq56", true, 1, 2, a, counter));
  return rep;
}

witten::WittenOptions witten_opts(const Config& c) { return {c.g_max, c.n_max}; }

ResidualReport witten_suite(const SuiteArgs& a, gue::MapCounter&) {
  ResidualReport rep("witten");
  const auto opt = witten_opts(a.cfg);
  record_equal(rep, "tau0^3.g0", witten::intersection_number(0, {0, 0, 0}, opt), Rat(1));
  record_equal(rep, "tau1.g1", witten::intersection_number(1, {1}, opt), Rat(1, 24));
  record_equal(rep, "tau0tau2.g1", witten::intersection_number(1, {0, 2}, opt), Rat(1, 24));
  record_equal(rep, "tau1^2.g1", witten::intersection_number(1, {1, 1}, opt), Rat(1, 24));
  int non_exact = 0;
  for (int g = 0; g <= opt.g_max; ++g) {
    for (int n = 1; n <= opt.n_max; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const std::string gn = "g=" + std::to_string(g) + ";n=" + std::to_string(n);
      try {
        const HomogPoly& q = witten::q_polynomial(g, n, opt);
        rep.record("qpoly.positive[" + gn + "]", q.all_coefficients_positive(), q.str());
        bool symmetric = true;
        for (int s = 0; s + 1 < n; ++s) {
          std::vector<int> perm(static_cast<std::size_t>(n));
          for (int t = 0; t < n; ++t) perm[static_cast<std::size_t>(t)] = t;
          std::swap(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(s) + 1]);
          symmetric = symmetric && q.permuted(perm) == q;
        }
        rep.record("qpoly.symmetric[" + gn + "]", symmetric, q.str());
      } catch (const NonExactDivision& e) {
        ++non_exact;
        rep.record("qpoly.exact[" + gn + "]", false, e.what());
      }
      rep.absorb(witten::lx_crosscheck(g, n, opt));
    }
  }
  rep.notes["non_exact_divisions"] = std::to_string(non_exact);
  rep.absorb(witten::verify_string_dilaton(opt));
  rep.absorb(witten::verify_kdv_relation(opt.g_max, opt.n_max - 1, opt));
  return rep;
}

ResidualReport kdv_suite(const SuiteArgs& a, gue::MapCounter&) {
  ResidualReport rep("kdv");
  using kdv::DiffPoly;
  const DiffPoly expected = DiffPoly::jet(0) * DiffPoly::jet(1) + DiffPoly::jet(3) * Rat(1, 12);
  const DiffPoly rhs1 = kdv::kdv_flow_rhs(1);
  rep.record("flow_rhs[1]", rhs1 == expected, rhs1.str());
  rep.notes["flow_rhs[1]"] = rhs1.str();
  const std::vector<int> flows = a.d.empty() ? std::vector<int>{1, 2, 3} : a.d;
  for (const int d : flows) {
    if (d < 1 || d > 3) throw UsageError("--d", "KdV flows are available for d in [1, 3]");
    const bool low = d == 3;
    rep.absorb(kdv::verify_witten_kdv(d, low ? std::min(a.cfg.degree, 3) : a.cfg.degree, 2, low ? 3 : 2));
  }
  return rep;
}

ResidualReport bilinear(const SuiteArgs& a, gue::MapCounter&) {
  ResidualReport rep = witten::verify_bilinear(a.cfg.degree + 3, 2, 3);
  rep.name = "bilinear";
  return rep;
}

using SuiteFn = std::function<ResidualReport(const SuiteArgs&, gue::MapCounter&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"closed-forms", closed_forms},
      {"dilation", dilation},
      {"pdes", pdes},
      {"resolvent", resolvent},
      {"toda", toda_suite},
      {"initial", initial},
      {"volterra", volterra_suite},
      {"feg", feg},
      {"pre", [](const SuiteArgs& a, gue::MapCounter& c) { return identity_grid("pre", false, 1, 2, a, c); }},
      {"eq56", [](const SuiteArgs& a, gue::MapCounter& c) { return identity_grid("eq56", true, 1, 2, a, c); }},
      {"central", central},
      {"witten", witten_suite},
      {"kdv", kdv_suite},
      {"bilinear", bilinear},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

ResidualReport run_suite(const std::string& name, const SuiteArgs& args, gue::MapCounter& counter) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw UsageError("suite", "unknown suite '" + name + "'");
  return it->second(args, counter);
}

}  // namespace guekdv::cli
