#include "guekdv/toda/gue_resolvent.hpp"

#include "guekdv/combinatorics.hpp"
#include "guekdv/errors.hpp"

#include <algorithm>
#include <tuple>

namespace guekdv::toda {

XEpsPoly::XEpsPoly(const BigInt& c, int deg, int eps_cutoff) : cutoff_(eps_cutoff) {
  if (c == 0) return;
  if (deg < 0) throw Error("XEpsPoly: negative degree");
  deg_ = deg;
  c_.push_back(c);
}

XEpsPoly XEpsPoly::shifted_x(int k, int eps_cutoff) {
  XEpsPoly p(BigInt(1), 1, eps_cutoff);
  if (k != 0 && eps_cutoff >= 1) p.c_.push_back(BigInt(k));
  return p;
}

bool XEpsPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
}

BigInt XEpsPoly::coefficient(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(j)];
}

XEpsPoly XEpsPoly::shifted(int k) const {
  if (k == 0 || is_zero()) return *this;
  XEpsPoly r;
  r.deg_ = deg_;
  r.cutoff_ = cutoff_;
  const int top = std::min(deg_, cutoff_);
  r.c_.assign(static_cast<std::size_t>(top) + 1, 0);
  const BigInt kk(k);
  for (int j = 0; j < static_cast<int>(c_.size()); ++j) {
    if (c_[static_cast<std::size_t>(j)] == 0) continue;
    const int p = deg_ - j;
    BigInt kr = 1;
    for (int s = 0; j + s <= top && s <= p; ++s) {
      r.c_[static_cast<std::size_t>(j + s)] += c_[static_cast<std::size_t>(j)] * binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(s)) * kr;
      kr *= kk;
    }
  }
  return r;
}

XEpsPoly operator+(const XEpsPoly& a, const XEpsPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.deg_ != b.deg_) throw InconsistentSystem("XEpsPoly: adding polynomials of different degrees");
  XEpsPoly r = a;
  r.cutoff_ = std::min(a.cutoff_, b.cutoff_);
  if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size());
  for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[j] += b.c_[j];
  const auto keep = static_cast<std::size_t>(std::min(r.deg_, r.cutoff_)) + 1;
  if (r.c_.size() > keep) r.c_.resize(keep);
  return r;
}

XEpsPoly operator-(const XEpsPoly& a) {
  XEpsPoly r = a;
  for (auto& v : r.c_) v = -v;
  return r;
}

XEpsPoly operator-(const XEpsPoly& a, const XEpsPoly& b) { return a + (-b); }

XEpsPoly operator*(const XEpsPoly& a, const XEpsPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  XEpsPoly r;
  r.deg_ = a.deg_ + b.deg_;
  r.cutoff_ = std::min(a.cutoff_, b.cutoff_);
  const int top = std::min(r.deg_, r.cutoff_);
  r.c_.assign(static_cast<std::size_t>(top) + 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size() && static_cast<int>(i + j) <= top; ++j) {
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

std::vector<Mat2<XEpsPoly>> gue_resolvent(int depth, int eps_cutoff) {
  return solve_resolvent(
      depth, XEpsPoly(), XEpsPoly::shifted_x(0, eps_cutoff), XEpsPoly(BigInt(1), 0, eps_cutoff),
      [](const XEpsPoly& p, int k) { return p.shifted(k); }, [](const XEpsPoly& p) { return p.is_zero(); });
}

std::map<std::pair<int, int>, BigInt> onepoint_correlators_via_resolvent(int i_max, int g_max) {
  std::map<std::pair<int, int>, BigInt> out;
  if (i_max < 1 || g_max < 0) return out;
  const auto R = gue_resolvent(i_max + 1, 2 * g_max);
  for (int i = 2; i <= i_max; i += 2) {
    // [lambda^{-i-1}] R_21 = eps (Lambda - 1) sum_g Map_g(i) eps^{2g-2} x^{e_g}, e_g = 1 - 2g + i/2.
    const XEpsPoly& c = R[static_cast<std::size_t>(i + 1)].c;
    std::vector<BigInt> maps;
    const int g_top = std::min(g_max, i / 4);
    for (int g = 0; g <= g_top; ++g) {
      BigInt acc = c.coefficient(2 * g);
      for (int gp = 0; gp < g; ++gp) {
        const long e = 1 - 2 * gp + i / 2;
        acc -= maps[static_cast<std::size_t>(gp)] * gen_binom(e, static_cast<unsigned>(2 * g - 2 * gp + 1)).num();
      }
      const long eg = 1 - 2 * g + i / 2;
      if (acc % eg != 0) throw NonExactDivision("onepoint_correlators_via_resolvent: non-integer count");
      maps.push_back(acc / eg);
      out[{g, i}] = maps.back();
    }
  }
  return out;
}

std::map<std::tuple<int, int, int>, BigInt> twopoint_correlators_via_resolvent(int i_max, int j_max,
                                                                              int g_max) {
  std::map<std::tuple<int, int, int>, BigInt> out;
  const int s_max = i_max + j_max;
  const auto R = gue_resolvent(s_max, 2 * g_max);
  auto tr = [&](int k, int l) {
    const auto& A = R[static_cast<std::size_t>(k)];
    const auto& B = R[static_cast<std::size_t>(l)];
    return A.a * B.a + A.b * B.c + A.c * B.b + A.d * B.d;
  };
  // p_{k,l} = [t^k u^l](tr R R - 1) with t = 1/lambda, u = 1/mu, divided twice by (u - t).
  auto divide = [](const std::vector<XEpsPoly>& p) {
    const int s = static_cast<int>(p.size()) - 1;  // p[a] holds the coefficient of t^a u^{s-a}
    std::vector<XEpsPoly> q(static_cast<std::size_t>(std::max(s, 0)));
    for (int a = 0; a < s; ++a) {
      XEpsPoly acc;
      for (int k = 0; k <= a; ++k) acc = acc + p[static_cast<std::size_t>(a - k)];
      q[static_cast<std::size_t>(a)] = acc;
    }
    // p_{a,c} = q_{a,c-1} - q_{a-1,c}
    for (int a = 0; a <= s; ++a) {
      XEpsPoly lhs = (a < s ? q[static_cast<std::size_t>(a)] : XEpsPoly());
      if (a > 0) lhs = lhs - q[static_cast<std::size_t>(a - 1)];
      if (!(lhs - p[static_cast<std::size_t>(a)]).is_zero()) {
        throw NonExactDivision("twopoint_correlators_via_resolvent: (u - t) does not divide");
      }
    }
    return q;
  };
  for (int s = 2; s <= s_max; s += 2) {
    std::vector<XEpsPoly> p(static_cast<std::size_t>(s) + 1);
    for (int a = 0; a <= s; ++a) p[static_cast<std::size_t>(a)] = tr(a, s - a);
    const auto q2 = divide(divide(p));  // q2[a]: coefficient of t^a u^{s-2-a}
    for (int i = 1; i <= std::min(i_max, s - 1); ++i) {
      const int j = s - i;
      if (j < i || j > j_max) continue;
      const XEpsPoly& c = q2[static_cast<std::size_t>(i - 1)];
      for (int g = 0; g <= g_max && 2 * g <= s / 2; ++g) {
        if (g > gue::IndexMultiset{i, j}.max_genus()) break;
        out[{g, i, j}] = c.coefficient(2 * g);
      }
    }
  }
  return out;
}

}  // namespace guekdv::toda
