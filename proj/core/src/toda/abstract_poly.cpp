#include "guekdv/toda/abstract_poly.hpp"

#include <algorithm>
#include <climits>

namespace guekdv::toda {

namespace {

AbstractPoly::Monomial multiply(const AbstractPoly::Monomial& a, const AbstractPoly::Monomial& b) {
  AbstractPoly::Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

AbstractPoly::AbstractPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, BigInt(c));
}

AbstractPoly AbstractPoly::symbol(Symbol s) {
  AbstractPoly p;
  p.terms_.emplace(Monomial{{s, 1}}, BigInt(1));
  return p;
}

void AbstractPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AbstractPoly AbstractPoly::shifted(int k) const {
  if (k == 0) return *this;
  AbstractPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    for (auto& [sym, e] : s) sym.shift += k;
    r.terms_.emplace_hint(r.terms_.end(), std::move(s), c);
  }
  return r;
}

AbstractPoly AbstractPoly::derivative(Symbol s) const {
  AbstractPoly r;
  for (const auto& [m, c] : terms_) {
    const auto it = std::find_if(m.begin(), m.end(), [&](const auto& p) { return p.first == s; });
    if (it == m.end()) continue;
    Monomial d = m;
    auto& entry = d[static_cast<std::size_t>(it - m.begin())];
    const int e = entry.second;
    if (e == 1) {
      d.erase(d.begin() + (it - m.begin()));
    } else {
      entry.second = e - 1;
    }
    r.add_term(d, c * e);
  }
  return r;
}

std::pair<int, int> AbstractPoly::window() const {
  int lo = INT_MAX;
  int hi = INT_MIN;
  for (const auto& [m, c] : terms_) {
    for (const auto& [sym, e] : m) {
      lo = std::min(lo, sym.shift);
      hi = std::max(hi, sym.shift);
    }
  }
  if (lo > hi) return {0, 0};
  return {lo, hi};
}

AbstractPoly& AbstractPoly::operator+=(const AbstractPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AbstractPoly& AbstractPoly::operator-=(const AbstractPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AbstractPoly operator-(const AbstractPoly& a) {
  AbstractPoly r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AbstractPoly operator*(const AbstractPoly& a, const AbstractPoly& b) {
  AbstractPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(multiply(ma, mb), ca * cb);
  }
  return r;
}

std::string AbstractPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string body;
    for (const auto& [sym, e] : m) {
      if (!body.empty()) body += "*";
      body += (sym.is_w ? "w_" : "v_") + std::to_string(sym.shift);
      if (e != 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      s += mag.get_str();
    } else {
      s += (mag == 1 ? "" : mag.get_str() + "*") + body;
    }
  }
  return s;
}

LatticeOp LatticeOp::shift(int m, const AbstractPoly& coeff) {
  LatticeOp op;
  op.add_term(m, coeff);
  return op;
}

LatticeOp LatticeOp::toda_lax() {
  return shift(1) + shift(0, AbstractPoly::v(0)) + shift(-1, AbstractPoly::w(0));
}

LatticeOp LatticeOp::volterra_lax() { return shift(1) + shift(-1, AbstractPoly::w(0)); }

AbstractPoly LatticeOp::coefficient(int m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? AbstractPoly() : it->second;
}

void LatticeOp::add_term(int m, const AbstractPoly& c) {
  if (c.is_zero()) return;
  auto& slot = terms_[m];
  slot += c;
  if (slot.is_zero()) terms_.erase(m);
}

LatticeOp LatticeOp::positive_part() const {
  LatticeOp r;
  for (const auto& [m, c] : terms_) {
    if (m >= 0) r.terms_.emplace(m, c);
  }
  return r;
}

LatticeOp LatticeOp::pow(unsigned k) const {
  LatticeOp r = shift(0);
  for (unsigned t = 0; t < k; ++t) r = r * *this;
  return r;
}

LatticeOp& LatticeOp::operator+=(const LatticeOp& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LatticeOp& LatticeOp::operator-=(const LatticeOp& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LatticeOp operator*(const LatticeOp& a, const LatticeOp& b) {
  LatticeOp r;
  for (const auto& [ma, pa] : a.terms_) {
    for (const auto& [mb, pb] : b.terms_) r.add_term(ma + mb, pa * pb.shifted(ma));
  }
  return r;
}

}  // namespace guekdv::toda
