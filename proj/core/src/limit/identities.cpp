#include "guekdv/limit/identities.hpp"

#include "guekdv/combinatorics.hpp"
#include "guekdv/errors.hpp"
#include "guekdv/limit/okounkov.hpp"
#include "guekdv/parallel.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <numeric>

namespace guekdv::limit {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kFloatDigits>>;

/// (2^{2g+3} - 2) B_{2g+2}.
Rat c(int g) {
  return Rat(BigInt((BigInt(1) << static_cast<unsigned>(2 * g + 3)) - 2)) * bernoulli(static_cast<unsigned>(2 * g + 2));
}

Rat gb(long p, int k) { return k < 0 ? Rat(0) : gen_binom(p, static_cast<unsigned>(k)); }

/// Map counts over sub-multisets of 2j, empty set and negative genus giving 0.
class Maps {
 public:
  Maps(const std::vector<int>& j, gue::MapCounter& counter) : j_(j), counter_(counter) {}

  Rat operator()(int g, unsigned mask) const {
    std::vector<int> idx;
    for (std::size_t t = 0; t < j_.size(); ++t) {
      if (mask >> t & 1U) idx.push_back(2 * j_[t]);
    }
    if (g < 0 || idx.empty()) return Rat(0);
    return Rat(counter_.count(g, gue::IndexMultiset(idx)));
  }

  [[nodiscard]] long sum(unsigned mask) const {
    long s = 0;
    for (std::size_t t = 0; t < j_.size(); ++t) {
      if (mask >> t & 1U) s += j_[t];
    }
    return s;
  }

 private:
  const std::vector<int>& j_;
  gue::MapCounter& counter_;
};

long popcount(unsigned m) { return static_cast<long>(__builtin_popcount(m)); }


}  // namespace

std::pair<Rat, Rat> pre_identity_sides(int h, const std::vector<int>& j, gue::MapCounter& counter) {
  const int n = static_cast<int>(j.size());
  const unsigned full = (1U << n) - 1;
  const Maps M(j, counter);
  const long J = M.sum(full);
  Rat L;
  for (int g = 0; g <= h; ++g) {
    const int gp = h - g;
    const Rat delta = (gp == 0 && n == 0) ? Rat(1) : Rat(0);
    L += c(g) * (Rat(2 * J) * M(gp, full) + delta) * gb(2 - 2 * gp - n + J, 2 * g + 2);
  }
  Rat R;
  for (unsigned A = 0; A <= full; ++A) {
    const unsigned B = full & ~A;
    const long jA = M.sum(A);
    const long jB = M.sum(B);
    const long nA = popcount(A);
    const long nB = popcount(B);
    for (int g1 = 0; g1 <= h; ++g1) {
      for (int g2 = 0; g1 + g2 <= h; ++g2) {
        for (int g1p = 0; g1 + g2 + g1p <= h; ++g1p) {
          const int g2p = h - g1 - g2 - g1p;
          const Rat d1 = (g1p == 0 && A == 0) ? Rat(1) : Rat(0);
          const Rat f1 = c(g1) / Rat(2 * g1 + 2) * gb(2 - 2 * g1p - nA + jA, 2 * g1 + 1) *
                         (Rat(2 * jA) * M(g1p, A) + d1);
          if (f1.is_zero()) continue;
          const Rat d2 = (B == 0 && g2 == 0 && g2p == 0) ? Rat(1) : Rat(0);
          const Rat f2 = d2 + Rat(2 * (2 * g2 + 3)) * gb(2 - 2 * g2p - nB + jB, 2 * g2 + 3) * M(g2p, B);
          R += f1 * f2;
        }
      }
    }
  }
  return {L, R};
}

Rat pre_identity_residual(int h, const std::vector<int>& j, gue::MapCounter& counter) {
  const auto [L, R] = pre_identity_sides(h, j, counter);
  return L - R;
}

std::pair<Rat, Rat> eq56_sides(int h, const std::vector<int>& j, gue::MapCounter& counter) {
  const int n = static_cast<int>(j.size());
  if (n < 1) throw Error("eq56_sides: needs at least one index");
  const unsigned full = (1U << n) - 1;
  const Maps M(j, counter);
  const long J = M.sum(full);
  const long e = J - 2L * h - n;
  Rat L = c(0) * Rat((2L * h + n - 1) * (e + 2) * e) * M(h, full);
  L += c(1) * Rat(J) * M(h - 1, full) * Rat((e + 4) * (e + 3) * (e + 2) * (e + 1), 12);
  for (int g = 2; g <= h; ++g) L += c(g) * Rat(2 * J) * M(h - g, full) * gb(2 - 2 * (h - g) - n + J, 2 * g + 2);
  Rat R;
  for (unsigned A = 1; A < full; ++A) {
    const unsigned B = full & ~A;
    const long jA = M.sum(A);
    const long jB = M.sum(B);
    const long nA = popcount(A);
    const long nB = popcount(B);
    for (int g1p = 0; g1p <= h; ++g1p) {
      const int g2p = h - g1p;
      const long eB = jB - 2L * g2p - nB;
      R += c(0) * Rat((2 - 2L * g1p - nA + jA) * jA) * M(g1p, A) * Rat((eB + 2) * (eB + 1) * eB) * M(g2p, B);
    }
    for (int g1 = 0; g1 <= h; ++g1) {
      for (int g2 = 0; g1 + g2 <= h; ++g2) {
        if (g1 + g2 == 0) continue;
        for (int g1p = 0; g1 + g2 + g1p <= h; ++g1p) {
          const int g2p = h - g1 - g2 - g1p;
          R += c(g1) / Rat(g1 + 1) * gb(2 - 2 * g1p - nA + jA, 2 * g1 + 1) * Rat(jA) * M(g1p, A) *
               Rat(2 * (2 * g2 + 3)) * gb(2 - 2 * g2p - nB + jB, 2 * g2 + 3) * M(g2p, B);
        }
      }
    }
  }
  R += c(0) * Rat(10) * gb(2 - 2 * (h - 1) - n + J, 5) * M(h - 1, full);
  for (int g2 = 2; g2 <= h; ++g2) {
    R += c(0) * Rat(2 * (2 * g2 + 3)) * gb(2 - 2 * (h - g2) - n + J, 2 * g2 + 3) * M(h - g2, full);
  }
  for (int g1 = 1; g1 <= h; ++g1) {
    R += c(g1) / Rat(2 * g1 + 2) * gb(2 - 2 * (h - g1) - n + J, 2 * g1 + 1) * M(h - g1, full) * Rat(2 * J);
  }
  return {L, R};
}

Rat eq56_residual(int h, const std::vector<int>& j, gue::MapCounter& counter) {
  const auto [L, R] = eq56_sides(h, j, counter);
  return L - R;
}

std::vector<std::vector<int>> j_grid(int n, int index_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo, int left) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; 2 * v <= left; ++v) {
      cur.push_back(v);
      self(self, v, left - 2 * v);
      cur.pop_back();
    }
  };
  rec(rec, 1, index_total);
  return out;
}

ResidualReport verify_central_identities(int h_max, int n_max, int index_total, gue::MapCounter& counter) {
  ResidualReport rep("central_identities");
  struct Task {
    bool five_block;
    int h;
    std::vector<int> j;
  };
  std::vector<Task> tasks;
  for (int h = 0; h <= h_max; ++h) {
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& j : j_grid(n, index_total)) {
        tasks.push_back({false, h, j});
        if (n >= 1) tasks.push_back({true, h, j});
      }
    }
  }
  const auto res = parallel_map<Rat>(tasks.size(), [&](std::size_t k) {
    const Task& t = tasks[k];
    return t.five_block ? eq56_residual(t.h, t.j, counter) : pre_identity_residual(t.h, t.j, counter);
  });
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    std::string key = std::string(tasks[k].five_block ? "eq56" : "pre") + "[h=" + std::to_string(tasks[k].h) + ";j=";
    for (std::size_t a = 0; a < tasks[k].j.size(); ++a) key += (a ? "," : "") + std::to_string(tasks[k].j[a]);
    rep.record(key + "]", res[k].is_zero(), res[k].str());
  }
  return rep;
}

IdentityLimitReport limit_of_identity_demo(int h, const std::vector<Rat>& x, const std::vector<Rat>& ladder,
                                           gue::MapCounter& counter) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw Error("limit_of_identity_demo: needs at least one x entry");
  IdentityLimitReport rep;
  rep.h = h;
  rep.x = x;
  const Rat X = std::accumulate(x.begin(), x.end(), Rat(0));
  const Rat X5 = X * X * X * X * X;
  const Rat q_prev = h >= 1 ? witten_q_value(h - 1, x) : Rat(0);
  rep.lhs_limit = Rat(2 * h + n - 1) * X * X * witten_q_value(h, x) - X5 * q_prev / Rat(24);
  Rat splits;
  const unsigned full = (1U << n) - 1;
  for (unsigned A = 1; A < full; ++A) {
    std::vector<Rat> xA;
    std::vector<Rat> xB;
    for (int t = 0; t < n; ++t) (A >> t & 1U ? xA : xB).push_back(x[static_cast<std::size_t>(t)]);
    const Rat sA = std::accumulate(xA.begin(), xA.end(), Rat(0));
    const Rat sB = std::accumulate(xB.begin(), xB.end(), Rat(0));
    for (int g1 = 0; g1 <= h; ++g1) {
      splits += sA * sA * witten_q_value(g1, xA) * sB * sB * sB * witten_q_value(h - g1, xB);
    }
  }
  rep.rhs_limit = splits + X5 * q_prev / Rat(24);

  const Real ln2 = boost::multiprecision::log(Real(2));
  const Real lnpi = boost::multiprecision::log(boost::math::constants::pi<Real>());
  for (const Rat& k : ladder) {
    const std::vector<int> idx = round_indices(x, k, gue::Parity::Even);
    std::vector<int> j;
    for (int i : idx) j.push_back(i / 2);
    const auto [L, R] = eq56_sides(h, j, counter);
    const long J = std::accumulate(j.begin(), j.end(), 0L);
    Real lx = 0;
    for (const Rat& xa : x) {
      lx += boost::multiprecision::log(Real(xa.num().get_str()) / Real(xa.den().get_str()));
    }
    const Real kap = Real(k.num().get_str()) / Real(k.den().get_str());
    const Real scale = boost::multiprecision::exp((Real(2 * h - 1) + Real(3 * n) / 2) * ln2 + Real(n) / 2 * lnpi -
                                                  lx / 2 - Real(2 * J) * ln2 -
                                                  (Real(3 * h - 1) + Real(3 * n) / 2) * boost::multiprecision::log(kap));
    auto value = [&](const Rat& q) {
      return (Real(q.num().get_str()) / Real(q.den().get_str()) * scale).convert_to<double>();
    };
    rep.rows.push_back({k, j, value(L), value(R)});
  }
  return rep;
}

}  // namespace guekdv::limit
