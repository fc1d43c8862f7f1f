#include "guekdv/gue/corr_poly.hpp"

namespace guekdv::gue {

CorrPolyN CorrPolyN::monomial(const Rat& c, int exponent) {
  CorrPolyN p;
  p.add_term(exponent, c);
  return p;
}

Rat CorrPolyN::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

void CorrPolyN::add_term(int exponent, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat CorrPolyN::at_one() const {
  Rat s;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

CorrPolyN& CorrPolyN::operator+=(const CorrPolyN& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CorrPolyN& CorrPolyN::operator-=(const CorrPolyN& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CorrPolyN& CorrPolyN::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CorrPolyN operator*(const CorrPolyN& a, const CorrPolyN& b) {
  CorrPolyN r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

std::string CorrPolyN::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = c.sign() < 0 ? -c : c;
    if (s.empty()) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rat(1);
    if (e == 0) {
      s += mag.str();
      continue;
    }
    if (!unit) s += mag.str() + "*";
    s += "N";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace guekdv::gue
