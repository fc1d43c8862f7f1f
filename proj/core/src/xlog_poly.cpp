#include "guekdv/xlog_poly.hpp"

#include "guekdv/errors.hpp"

namespace guekdv {

XLogPoly XLogPoly::monomial(const Rat& c, int x_exp, int log_deg, int zeta_deg) {
  XLogPoly p;
  p.add_term({x_exp, log_deg, zeta_deg}, c);
  return p;
}

Rat XLogPoly::coefficient(const XLogKey& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rat() : it->second;
}

bool XLogPoly::is_laurent() const {
  for (const auto& [k, c] : terms_) {
    if (k.log_deg != 0 || k.zeta_deg != 0) return false;
  }
  return true;
}

void XLogPoly::add_term(const XLogKey& k, const Rat& c) {
  if (c.is_zero()) return;
  if (k.log_deg < 0 || k.zeta_deg < 0 || k.zeta_deg > 1) {
    throw Error("XLogPoly: invalid term exponents");
  }
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XLogPoly& XLogPoly::operator+=(const XLogPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

XLogPoly& XLogPoly::operator-=(const XLogPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

XLogPoly& XLogPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

XLogPoly operator*(const XLogPoly& a, const XLogPoly& b) {
  XLogPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.zeta_deg + kb.zeta_deg > 1) {
        throw Error("XLogPoly: product of two zeta'(-1) terms is not representable");
      }
      r.add_term({ka.x_exp + kb.x_exp, ka.log_deg + kb.log_deg, ka.zeta_deg + kb.zeta_deg}, ca * cb);
    }
  }
  return r;
}

XLogPoly XLogPoly::times_x_pow(int k) const {
  XLogPoly r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(XLogKey{key.x_exp + k, key.log_deg, key.zeta_deg}, c);
  return r;
}

XLogPoly XLogPoly::derivative() const {
  // d/dx x^p L^q = p x^{p-1} L^q + q x^{p-1} L^{q-1}
  XLogPoly r;
  for (const auto& [k, c] : terms_) {
    if (k.x_exp != 0) r.add_term({k.x_exp - 1, k.log_deg, k.zeta_deg}, c * Rat(k.x_exp));
    if (k.log_deg != 0) r.add_term({k.x_exp - 1, k.log_deg - 1, k.zeta_deg}, c * Rat(k.log_deg));
  }
  return r;
}

std::string XLogPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string t = c.str();
    if (!first) {
      if (t[0] == '-') {
        out += " - ";
        t.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    first = false;
    out += t;
    if (k.x_exp != 0) out += "*x^" + std::to_string(k.x_exp);
    if (k.log_deg == 1) out += "*log(x)";
    if (k.log_deg > 1) out += "*log(x)^" + std::to_string(k.log_deg);
    if (k.zeta_deg == 1) out += "*zeta'(-1)";
  }
  return out;
}

}  // namespace guekdv
