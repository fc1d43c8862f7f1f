#include "guekdv/kdv/pdo.hpp"

#include "guekdv/combinatorics.hpp"
#include "guekdv/errors.hpp"

#include <algorithm>

namespace guekdv::kdv {

DiffPoly::DiffPoly(const Rat& c) { add_term({}, c); }

DiffPoly DiffPoly::jet(int k) {
  DiffPoly p;
  p.add_term({k}, Rat(1));
  return p;
}

Rat DiffPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void DiffPoly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Rat& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      DiffPoly::Monomial m;
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

DiffPoly DiffPoly::dx() const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (a > 0 && m[a] == m[a - 1]) continue;
      const auto mult = static_cast<long>(std::count(m.begin(), m.end(), m[a]));
      Monomial up = m;
      ++up[a];
      std::sort(up.begin(), up.end());
      r.add_term(up, c * Rat(mult));
    }
  }
  return r;
}

int DiffPoly::weight() const {
  int w = -2;
  for (const auto& [m, c] : terms_) {
    int mw = 0;
    for (int k : m) mw += k + 2;
    if (w == -2) w = mw;
    else if (w != mw) return -1;
  }
  return w == -2 ? 0 : w;
}

std::string DiffPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str();
    for (int k : m) s += "*u" + std::to_string(k);
  }
  return s;
}

PsiDO PsiDO::d(int k) {
  PsiDO p;
  p.add_term(k, DiffPoly(Rat(1)));
  return p;
}

PsiDO PsiDO::multiplication(const DiffPoly& a) {
  PsiDO p;
  p.add_term(0, a);
  return p;
}

DiffPoly PsiDO::coefficient(int k) const {
  if (depth_ != kExact && k < -depth_) {
    throw DepthExceeded("PsiDO: order " + std::to_string(k) + " below depth " + std::to_string(depth_));
  }
  auto it = terms_.find(k);
  return it == terms_.end() ? DiffPoly() : it->second;
}

void PsiDO::add_term(int k, const DiffPoly& a) {
  if (a.is_zero() || (depth_ != kExact && k < -depth_)) return;
  auto& slot = terms_[k];
  slot += a;
  if (slot.is_zero()) terms_.erase(k);
}

int PsiDO::max_order() const { return terms_.empty() ? INT_MIN : terms_.rbegin()->first; }
int PsiDO::min_order() const { return terms_.empty() ? INT_MAX : terms_.begin()->first; }

PsiDO& PsiDO::operator+=(const PsiDO& o) {
  *this = truncated(o.depth_);
  for (const auto& [k, a] : o.terms_) add_term(k, a);
  return *this;
}

PsiDO& PsiDO::operator-=(const PsiDO& o) {
  *this = truncated(o.depth_);
  for (const auto& [k, a] : o.terms_) add_term(k, -a);
  return *this;
}

PsiDO PsiDO::positive_part() const {
  if (depth_ < 0) throw DepthExceeded("positive_part: orders below " + std::to_string(-depth_) + " are unknown");
  PsiDO r;
  for (const auto& [k, a] : terms_) {
    if (k >= 0) r.add_term(k, a);
  }
  return r;
}

PsiDO PsiDO::truncated(int depth) const {
  PsiDO r(std::min(depth_, depth));
  for (const auto& [k, a] : terms_) r.add_term(k, a);
  return r;
}

bool PsiDO::is_zero() const { return terms_.empty(); }

std::string PsiDO::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.str() + ")d^" + std::to_string(it->first);
  }
  return s;
}

PsiDO pdo_compose(const PsiDO& P, const PsiDO& Q) {
  auto known = [](int depth, int other_max) -> long {
    if (depth == PsiDO::kExact) return PsiDO::kExact;
    return static_cast<long>(depth) - (other_max == INT_MIN ? 0 : other_max);
  };
  const long nd = std::min(known(P.depth(), Q.max_order()), known(Q.depth(), P.max_order()));
  if (nd != PsiDO::kExact && nd < static_cast<long>(INT_MIN) / 2) throw DepthExceeded("pdo_compose: depth underflow");
  PsiDO r(static_cast<int>(nd));
  for (const auto& [k, a] : P.terms()) {
    for (const auto& [l, b] : Q.terms()) {
      DiffPoly db = b;
      for (long j = 0;; ++j) {
        const long order = static_cast<long>(k) + l - j;
        if (nd != PsiDO::kExact && order < -nd) break;
        if (k >= 0 && j > k) break;
        if (db.is_zero()) break;
        if (nd == PsiDO::kExact && k < 0 && j > 0) {
          throw DepthExceeded("pdo_compose: infinite expansion of an exact negative-order product");
        }
        r.add_term(static_cast<int>(order), a * db * gen_binom(k, static_cast<unsigned>(j)));
        db = db.dx();
      }
    }
  }
  return r;
}

PsiDO pdo_pow(const PsiDO& P, unsigned k) {
  PsiDO r = PsiDO::d(0);
  for (unsigned t = 0; t < k; ++t) r = pdo_compose(r, P);
  return r;
}

PsiDO lax_operator() {
  PsiDO L = PsiDO::d(2);
  L.add_term(0, DiffPoly::jet(0) * Rat(2));
  return L;
}

PsiDO lax_sqrt(int depth) {
  if (depth < 1) throw DepthExceeded("lax_sqrt: depth must be positive");
  const PsiDO L = lax_operator();
  PsiDO S(depth);
  S.add_term(1, DiffPoly(Rat(1)));
  // The d^{k+1} coefficient of S o S is 2 s_k plus terms in s_j, j > k.
  for (int k = 0; k >= -depth; --k) {
    const PsiDO sq = pdo_compose(S, S);
    S.add_term(k, (L.coefficient(k + 1) - sq.coefficient(k + 1)) * Rat(1, 2));
  }
  const PsiDO res = pdo_compose(S, S) - L;
  if (!res.is_zero()) throw InconsistentSystem("lax_sqrt: S o S - L = " + res.str());
  return S;
}

DiffPoly kdv_flow_rhs(int d, int depth, int d_max) {
  if (d < 1) throw Error("kdv_flow_rhs: d must be >= 1");
  if (d > d_max) throw BoundExceeded("kdv_flow_rhs: d=" + std::to_string(d) + " above bound " + std::to_string(d_max));
  const int M = depth > 0 ? depth : 2 * d + 4;
  const PsiDO L = lax_operator();
  const PsiDO P = pdo_compose(pdo_pow(L, static_cast<unsigned>(d)), lax_sqrt(M)).positive_part();
  const PsiDO C = pdo_compose(P, L) - pdo_compose(L, P);
  for (const auto& [k, a] : C.terms()) {
    if (k != 0) throw SupportViolation("kdv_flow_rhs: commutator has order " + std::to_string(k));
  }
  return C.coefficient(0) * Rat(BigInt(1), BigInt(2 * double_factorial(2 * d + 1)));
}

}  // namespace guekdv::kdv
