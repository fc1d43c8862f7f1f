#include "guekdv/eps_series.hpp"

#include "guekdv/combinatorics.hpp"
#include "guekdv/errors.hpp"

#include <algorithm>
#include <vector>

namespace guekdv {

namespace {

int sat_add(int a, int b) {
  if (a == EpsSeries::kExact || b == EpsSeries::kExact) return EpsSeries::kExact;
  const long s = static_cast<long>(a) + b;
  return s >= EpsSeries::kExact ? EpsSeries::kExact - 1 : static_cast<int>(s);
}

}  // namespace

EpsSeries::EpsSeries(const XLogPoly& c, int power, int prec) : prec_(prec) {
  if (power <= prec) add_term(power, c);
}

EpsSeries EpsSeries::zero_to(int prec) {
  EpsSeries s;
  s.prec_ = prec;
  return s;
}

int EpsSeries::valuation() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return prec_ == kExact ? kExact : prec_ + 1;
}

XLogPoly EpsSeries::coefficient(int k) const {
  if (k > prec_) {
    throw TruncationMismatch("EpsSeries: eps^" + std::to_string(k) + " requested, precision is eps^" +
                             std::to_string(prec_));
  }
  const auto it = terms_.find(k);
  return it == terms_.end() ? XLogPoly() : it->second;
}

void EpsSeries::add_term(int power, const XLogPoly& c) {
  if (power > prec_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EpsSeries EpsSeries::truncated(int order) const {
  EpsSeries r;
  r.prec_ = std::min(prec_, order);
  for (const auto& [p, c] : terms_) {
    if (p <= r.prec_) r.terms_.emplace(p, c);
  }
  return r;
}

EpsSeries EpsSeries::times_eps_pow(int k) const {
  EpsSeries r;
  r.prec_ = prec_ == kExact ? kExact : prec_ + k;
  for (const auto& [p, c] : terms_) r.terms_.emplace(p + k, c);
  return r;
}

EpsSeries EpsSeries::derivative_x() const {
  return map_coefficients([](const XLogPoly& c) { return c.derivative(); });
}

EpsSeries EpsSeries::map_coefficients(const std::function<XLogPoly(const XLogPoly&)>& f) const {
  EpsSeries r;
  r.prec_ = prec_;
  for (const auto& [p, c] : terms_) r.add_term(p, f(c));
  return r;
}

EpsSeries& EpsSeries::operator+=(const EpsSeries& o) {
  prec_ = std::min(prec_, o.prec_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->first > prec_ ? terms_.erase(it) : std::next(it);
  }
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

EpsSeries& EpsSeries::operator-=(const EpsSeries& o) {
  prec_ = std::min(prec_, o.prec_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->first > prec_ ? terms_.erase(it) : std::next(it);
  }
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

EpsSeries& EpsSeries::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  EpsSeries r;
  r.prec_ = std::min(sat_add(a.prec_, b.valuation()), sat_add(b.prec_, a.valuation()));
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      if (pa + pb > r.prec_) break;
      r.add_term(pa + pb, ca * cb);
    }
  }
  return r;
}

std::string EpsSeries::str() const {
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*eps^" + std::to_string(p);
  }
  if (out.empty()) out = "0";
  if (prec_ != kExact) out += " + O(eps^" + std::to_string(prec_ + 1) + ")";
  return out;
}

EpsSeries apply_operator(const EpsDiffOperator& op, const EpsSeries& f, int order) {
  const int raise = static_cast<int>(op.min_order) + op.eps_offset;
  bool cut = false;
  std::vector<Rat> coeffs;
  auto coeff = [&](unsigned m) -> const Rat& {
    while (coeffs.size() <= m) coeffs.push_back(op.coefficient(static_cast<unsigned>(coeffs.size())));
    return coeffs[m];
  };
  EpsSeries acc;
  for (const auto& [p, c] : f.terms()) {
    XLogPoly d = c;
    for (unsigned m = 0;; ++m) {
      if (d.is_zero()) break;
      if (order == EpsSeries::kExact && m > 4096) {
        throw TruncationMismatch("apply_operator: non-terminating expansion needs a finite order");
      }
      const long power = static_cast<long>(p) + m + op.eps_offset;
      if (m >= op.min_order) {
        if (power > order) {
          cut = true;
          break;
        }
        const Rat& cm = coeff(m);
        if (!cm.is_zero()) acc.add_term(static_cast<int>(power), d * cm);
      }
      d = d.derivative();
    }
  }
  int prec = f.is_exact() ? EpsSeries::kExact : sat_add(f.prec(), raise);
  if (cut) prec = std::min(prec, order);
  return acc.truncated(prec);
}

EpsDiffOperator shift_operator(long k) {
  return {[k](unsigned m) { return pow(Rat(k), m) / Rat(factorial(m)); }, 0, 0};
}

EpsDiffOperator forward_difference() {
  return {[](unsigned m) { return Rat(1) / Rat(factorial(m)); }, 1, 0};
}

EpsDiffOperator backward_difference() {
  return {[](unsigned m) { return Rat(m % 2 == 1 ? 1 : -1) / Rat(factorial(m)); }, 1, 0};
}

EpsDiffOperator second_difference() {
  return {[](unsigned m) { return m % 2 == 0 ? Rat(2) / Rat(factorial(m)) : Rat(); }, 2, 0};
}

EpsDiffOperator tanh_half() {
  // eps^{m+1} d^m with m = 2g+1
  return {[](unsigned m) {
            if (m % 2 == 0) return Rat();
            const unsigned n = m + 1;  // 2g+2
            return (pow(Rat(2), n + 1) - Rat(2)) * bernoulli(n) / Rat(factorial(n));
          },
          1, 1};
}

EpsSeries taylor_shift(const EpsSeries& f, long k, int order) {
  return apply_operator(shift_operator(k), f, order);
}

EpsSeries tanh_half_operator(const EpsSeries& f, int order) { return apply_operator(tanh_half(), f, order); }

}  // namespace guekdv
