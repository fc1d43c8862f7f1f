#include "guekdv/witten/npoint.hpp"

#include "guekdv/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace guekdv::witten {

namespace {

bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

std::mutex q_mutex;
std::map<std::pair<int, int>, HomogPoly> q_memo;
std::mutex corr_mutex;
std::map<std::pair<int, std::vector<int>>, Rat> corr_memo;

std::vector<int> all_vars(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

HomogPoly sum_of(int n, const std::vector<int>& vars) { return HomogPoly::linear_sum(n, vars); }

void split(int n, unsigned mask, std::vector<int>& A, std::vector<int>& B) {
  A.clear();
  B.clear();
  for (int t = 0; t < n; ++t) (mask >> t & 1U ? A : B).push_back(t);
}

/// |x_S|^p Q_g(x_S) embedded in n variables, with the unstable closed forms.
HomogPoly weighted_q(int g, int n, const std::vector<int>& S, unsigned p, const WittenOptions& opt) {
  const HomogPoly X = sum_of(n, S);
  const int k = static_cast<int>(S.size());
  if (!stable(g, k)) {
    if (g != 0 || k == 0) return HomogPoly(n, 0);
    // Q_0(x) = 1/x^2 and Q_0(x_1, x_2) = 1/(x_1 + x_2).
    const unsigned drop = k == 1 ? 2U : 1U;
    if (p < drop) throw Error("weighted_q: power too small for an unstable factor");
    return X.pow(p - drop);
  }
  std::vector<int> target(S.begin(), S.end());
  return q_polynomial(g, k, opt).embed(n, target) * X.pow(p);
}

HomogPoly compute_q(int g, int n, const WittenOptions& opt) {
  const auto I = all_vars(n);
  const HomogPoly X = sum_of(n, I);
  HomogPoly rhs(n, 3 * g - 1 + n);
  if (g >= 1) rhs += weighted_q(g - 1, n, I, 5, opt) * Rat(1, 12);
  std::vector<int> A;
  std::vector<int> B;
  for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
    split(n, mask, A, B);
    for (int g1 = 0; g1 <= g; ++g1) {
      const HomogPoly a = weighted_q(g1, n, A, 2, opt);
      if (a.is_zero()) continue;
      rhs += a * weighted_q(g - g1, n, B, 3, opt);
    }
  }
  return poly_exact_div(rhs, X.pow(2)) * Rat(1, 2 * g + n - 1);
}

}  // namespace

const HomogPoly& q_polynomial(int g, int n, const WittenOptions& opt) {
  if (n < 1 || !stable(g, n)) {
    throw Error("q_polynomial: (" + std::to_string(g) + "," + std::to_string(n) + ") is not stable");
  }
  if (g > opt.g_max || n > opt.n_max) {
    throw BoundExceeded("q_polynomial: (" + std::to_string(g) + "," + std::to_string(n) + ") outside budget g<=" +
                        std::to_string(opt.g_max) + ", n<=" + std::to_string(opt.n_max));
  }
  {
    std::lock_guard lock(q_mutex);
    auto it = q_memo.find({g, n});
    if (it != q_memo.end()) return it->second;
  }
  HomogPoly q = compute_q(g, n, opt);
  std::lock_guard lock(q_mutex);
  return q_memo.emplace(std::make_pair(g, n), std::move(q)).first->second;
}

Rat correlator_from_q(int g, std::vector<int> d, const WittenOptions& opt) {
  const int n = static_cast<int>(d.size());
  if (!stable(g, n) || std::accumulate(d.begin(), d.end(), 0) != 3 * g - 3 + n) return Rat(0);
  if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) return Rat(0);
  std::sort(d.begin(), d.end());
  return q_polynomial(g, n, opt).coefficient(d);
}

Rat intersection_number(int g, std::vector<int> d, const WittenOptions& opt) {
  const int n = static_cast<int>(d.size());
  if (g < 0 || !stable(g, n) || std::accumulate(d.begin(), d.end(), 0) != 3 * g - 3 + n) return Rat(0);
  if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) return Rat(0);
  std::sort(d.begin(), d.end());
  const auto key = std::make_pair(g, d);
  {
    std::lock_guard lock(corr_mutex);
    auto it = corr_memo.find(key);
    if (it != corr_memo.end()) return it->second;
  }
  Rat r;
  if (d.front() == 0) {
    std::vector<int> rest(d.begin() + 1, d.end());
    for (std::size_t a = 0; a < rest.size(); ++a) {
      if (rest[a] == 0) continue;
      std::vector<int> m = rest;
      --m[a];
      r += intersection_number(g, m, opt);
    }
    if (rest.size() == 2 && g == 0) r += Rat(1);
  } else if (d.front() == 1) {
    std::vector<int> rest(d.begin() + 1, d.end());
    const int k = static_cast<int>(rest.size());
    r = intersection_number(g, rest, opt) * Rat(2 * g - 2 + k);
    if (g == 1 && k == 0) r += Rat(1, 24);
  } else {
    r = correlator_from_q(g, d, opt);
  }
  std::lock_guard lock(corr_mutex);
  corr_memo.emplace(key, r);
  return r;
}

std::vector<std::vector<int>> dimension_keys(int g, int n) {
  std::vector<std::vector<int>> out;
  const int total = 3 * g - 3 + n;
  if (total < 0 || n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int lo, int slots) -> void {
    if (slots == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = lo; v * slots <= left; ++v) {
      cur.push_back(v);
      self(self, left - v, v, slots - 1);
      cur.pop_back();
    }
  };
  rec(rec, total, 0, n);
  return out;
}

ResidualReport verify_string_dilaton(const WittenOptions& opt) {
  ResidualReport rep("string_dilaton");
  for (int g = 0; g <= opt.g_max; ++g) {
    for (int n = 0; n + 1 <= opt.n_max; ++n) {
      if (!stable(g, n + 1)) continue;
      // String: keys of length n with sum 3g-2+n.
      for (auto d : dimension_keys(g, n + 1)) {
        if (d.front() != 0) continue;
        std::vector<int> rest(d.begin() + 1, d.end());
        Rat rhs = (n == 2 && g == 0) ? Rat(1) : Rat(0);
        for (std::size_t a = 0; a < rest.size(); ++a) {
          if (rest[a] == 0) continue;
          std::vector<int> m = rest;
          --m[a];
          rhs += correlator_from_q(g, m, opt);
        }
        const Rat res = correlator_from_q(g, d, opt) - rhs;
        rep.record("string[" + std::to_string(g) + ";" + std::to_string(n) + "]", res.is_zero(), res.str());
      }
      for (auto d : dimension_keys(g, n + 1)) {
        auto it = std::find(d.begin(), d.end(), 1);
        if (it == d.end()) continue;
        std::vector<int> rest = d;
        rest.erase(rest.begin() + (it - d.begin()));
        Rat rhs = correlator_from_q(g, rest, opt) * Rat(2 * g - 2 + n);
        if (g == 1 && n == 0) rhs += Rat(1, 24);
        const Rat res = correlator_from_q(g, d, opt) - rhs;
        rep.record("dilaton[" + std::to_string(g) + ";" + std::to_string(n) + "]", res.is_zero(), res.str());
      }
    }
  }
  return rep;
}

ResidualReport verify_stringQ(int g, int n, int s, const WittenOptions& opt) {
  ResidualReport rep("stringQ");
  const int full_n = n + s;
  const HomogPoly full = q_polynomial(g, full_n, opt);
  std::vector<int> zeros;
  for (int t = n; t < full_n; ++t) zeros.push_back(t);
  const HomogPoly lhs = full.set_zero(zeros);
  const HomogPoly rhs = weighted_q(g, n, all_vars(n), static_cast<unsigned>(s), opt);
  const HomogPoly res = lhs - rhs;
  rep.record("[" + std::to_string(g) + "," + std::to_string(n) + "," + std::to_string(s) + "]", res.is_zero(),
             res.str());
  return rep;
}

ResidualReport lx_crosscheck(int g, int n, const WittenOptions& opt) {
  ResidualReport rep("lx");
  const auto I = all_vars(n);
  HomogPoly res = q_polynomial(g, n, opt) * sum_of(n, I) * Rat(2 * g + n - 1);
  if (g >= 1) res -= weighted_q(g - 1, n, I, 4, opt) * Rat(1, 12);
  // The split sum is symmetric in (A, B); each unordered pair counts once.
  HomogPoly splits(n, 3 * g - 2 + n);
  std::vector<int> A;
  std::vector<int> B;
  for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
    split(n, mask, A, B);
    for (int g1 = 0; g1 <= g; ++g1) splits += weighted_q(g1, n, A, 2, opt) * weighted_q(g - g1, n, B, 2, opt);
  }
  const HomogPoly unordered = res - splits * Rat(1, 2);
  const HomogPoly ordered = res - splits;
  rep.record("[" + std::to_string(g) + "," + std::to_string(n) + "]", unordered.is_zero(), unordered.str());
  rep.notes["ordered_pairs.residual"] = ordered.is_zero() ? "0" : ordered.str();
  return rep;
}

ResidualReport verify_kdv_relation(int g_max, int n_max, const WittenOptions& opt) {
  ResidualReport rep("kdv_relation");
  auto with = [](std::vector<int> d, int value, int times) {
    d.insert(d.end(), static_cast<std::size_t>(times), value);
    return d;
  };
  for (int g = 0; g <= g_max; ++g) {
    for (int n = 0; n <= n_max; ++n) {
      const int total = 3 * g - 1 + n;
      if (total < 0) continue;
      // All sorted d_I with the matching dimension: appended to tau_1 tau_0^2.
      for (const auto& key : dimension_keys(g, n + 3)) {
        std::vector<int> d = key;
        auto it = std::find(d.begin(), d.end(), 1);
        if (it == d.end()) continue;
        d.erase(it);
        for (int z = 0; z < 2; ++z) {
          auto iz = std::find(d.begin(), d.end(), 0);
          if (iz == d.end()) break;
          d.erase(iz);
        }
        if (static_cast<int>(d.size()) != n) continue;
        Rat rhs;
        if (g >= 1) rhs += intersection_number(g - 1, with(d, 0, 5), opt) * Rat(1, 12);
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
          std::vector<int> dA;
          std::vector<int> dB;
          for (int t = 0; t < n; ++t) (mask >> t & 1U ? dA : dB).push_back(d[static_cast<std::size_t>(t)]);
          for (int g1 = 0; g1 <= g; ++g1) {
            rhs += intersection_number(g1, with(dA, 0, 2), opt) * intersection_number(g - g1, with(dB, 0, 3), opt);
          }
        }
        const Rat res = intersection_number(g, with(with(d, 1, 1), 0, 2), opt) - rhs;
        std::string k = std::to_string(g) + ";";
        for (int x : d) k += std::to_string(x) + ",";
        rep.record(k, res.is_zero(), res.str());
      }
    }
  }
  return rep;
}

}  // namespace guekdv::witten
