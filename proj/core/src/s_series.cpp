#include "guekdv/s_series.hpp"

#include "guekdv/errors.hpp"

#include <algorithm>

namespace guekdv {

namespace {

SMonomial merge(const SMonomial& a, const SMonomial& b) {
  SMonomial r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace

std::string monomial_key(const SMonomial& m) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k != 0) s += ',';
    s += std::to_string(m[k]);
  }
  return s;
}

SSeries SSeries::constant(const EpsSeries& c, int max_degree, int max_index) {
  SSeries s(max_degree, max_index);
  s.add_term({}, c);
  return s;
}

bool SSeries::in_window(const SMonomial& m) const {
  return static_cast<int>(m.size()) <= max_degree_ && (m.empty() || m.back() <= max_index_);
}

EpsSeries SSeries::coefficient(const SMonomial& m) const {
  if (!in_window(m)) throw TruncationMismatch("SSeries: monomial {" + monomial_key(m) + "} outside the window");
  const auto it = terms_.find(m);
  return it == terms_.end() ? EpsSeries() : it->second;
}

void SSeries::add_term(const SMonomial& m, const EpsSeries& c) {
  if (!in_window(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero() && it->second.is_exact()) terms_.erase(it);
}

void SSeries::set_term(const SMonomial& m, const EpsSeries& c) {
  if (!in_window(m)) return;
  if (c.is_zero() && c.is_exact()) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

SSeries& SSeries::operator+=(const SSeries& o) {
  *this = restricted(std::min(max_degree_, o.max_degree_), std::min(max_index_, o.max_index_));
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SSeries& SSeries::operator-=(const SSeries& o) {
  *this = restricted(std::min(max_degree_, o.max_degree_), std::min(max_index_, o.max_index_));
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SSeries& SSeries::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SSeries operator*(const SSeries& a, const SSeries& b) {
  SSeries r(std::min(a.max_degree_, b.max_degree_), std::min(a.max_index_, b.max_index_));
  for (const auto& [ma, ca] : a.terms_) {
    if (!r.in_window(ma)) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (static_cast<int>(ma.size() + mb.size()) > r.max_degree_) continue;
      if (!mb.empty() && mb.back() > r.max_index_) continue;
      r.add_term(merge(ma, mb), ca * cb);
    }
  }
  return r;
}

SSeries operator*(const SSeries& a, const EpsSeries& c) {
  SSeries r(a.max_degree_, a.max_index_);
  for (const auto& [m, v] : a.terms_) r.add_term(m, v * c);
  return r;
}

SSeries SSeries::derivative_s(int i) const {
  if (i < 1 || i > max_index_) throw TruncationMismatch("SSeries: d/ds_" + std::to_string(i) + " outside window");
  SSeries r(max_degree_ - 1, max_index_);
  for (const auto& [m, c] : terms_) {
    const auto [lo, hi] = std::equal_range(m.begin(), m.end(), i);
    const long mult = hi - lo;
    if (mult == 0) continue;
    SMonomial reduced(m.begin(), lo);
    reduced.insert(reduced.end(), std::next(lo), m.end());
    r.add_term(reduced, c * Rat(mult));
  }
  return r;
}

SSeries SSeries::times_coupling(int i) const {
  SSeries r(max_degree_ == INT_MAX ? INT_MAX : max_degree_ + 1, max_index_);
  for (const auto& [m, c] : terms_) {
    SMonomial up = m;
    up.insert(std::upper_bound(up.begin(), up.end(), i), i);
    r.add_term(up, c);
  }
  return r;
}

SSeries SSeries::derivative_x() const {
  return map_coefficients([](const EpsSeries& c) { return c.derivative_x(); });
}

SSeries SSeries::apply(const EpsDiffOperator& op, int order) const {
  return map_coefficients([&](const EpsSeries& c) { return apply_operator(op, c, order); });
}

SSeries SSeries::shift(long k, int order) const {
  if (k == 0) return truncated_eps(order);
  return apply(shift_operator(k), order);
}

SSeries SSeries::times_eps_pow(int k) const {
  return map_coefficients([k](const EpsSeries& c) { return c.times_eps_pow(k); });
}

SSeries SSeries::truncated_eps(int order) const {
  return map_coefficients([order](const EpsSeries& c) { return c.truncated(order); });
}

SSeries SSeries::restricted(int max_degree, int max_index) const {
  SSeries r(std::min(max_degree, max_degree_), std::min(max_index, max_index_));
  for (const auto& [m, c] : terms_) {
    if (r.in_window(m)) r.terms_.emplace(m, c);
  }
  return r;
}

SSeries SSeries::set_couplings_zero(const std::function<bool(int)>& keep) const {
  SSeries r(max_degree_, max_index_);
  for (const auto& [m, c] : terms_) {
    if (std::all_of(m.begin(), m.end(), keep)) r.terms_.emplace(m, c);
  }
  return r;
}

SSeries SSeries::without_constant() const {
  SSeries r = *this;
  r.terms_.erase(SMonomial{});
  return r;
}

SSeries SSeries::eps_slice(int k) const {
  return map_coefficients([k](const EpsSeries& c) { return EpsSeries(c.coefficient(k)); });
}

SSeries SSeries::map_coefficients(const std::function<EpsSeries(const EpsSeries&)>& f) const {
  SSeries r(max_degree_, max_index_);
  for (const auto& [m, c] : terms_) r.set_term(m, f(c));
  return r;
}

int SSeries::min_prec() const {
  int p = EpsSeries::kExact;
  for (const auto& [m, c] : terms_) p = std::min(p, c.prec());
  return p;
}

SSeries exp_series(const SSeries& a, int order) {
  const EpsSeries c0 = a.constant_term();
  EpsSeries rest0 = c0;
  int x_power = 0;
  if (c0.valuation() <= 0) {
    for (const auto& [p, c] : c0.terms()) {
      if (p < 0) throw Error("exp_series: negative eps power in the coupling-free part");
      if (p > 0) continue;
      for (const auto& [k, v] : c.terms()) {
        if (k == XLogKey{0, 1, 0} && v.is_integer() && v.num().fits_sint_p()) {
          x_power = static_cast<int>(v.num().get_si());
        } else {
          throw Error("exp_series: unsupported eps^0 constant term " + c.str());
        }
      }
    }
    rest0 -= EpsSeries(XLogPoly::monomial(Rat(x_power), 0, 1));
  }
  SSeries arg = a;
  arg.set_term({}, rest0);
  arg = arg.truncated_eps(order);

  SSeries result = SSeries::constant(EpsSeries(1), a.max_degree(), a.max_index());
  SSeries term = result;
  // Without a finite eps order the expansion must terminate through the coupling degree alone.
  if (order == EpsSeries::kExact && !rest0.is_zero()) {
    throw TruncationMismatch("exp_series: coupling-free eps terms need a finite order");
  }
  const int kmax = order == EpsSeries::kExact ? a.max_degree() + 1 : a.max_degree() + std::max(order, 0) + 4;
  for (int k = 1; k <= kmax; ++k) {
    term = (term * arg).truncated_eps(order);
    term *= Rat(1, k);
    if (term.terms().empty()) break;
    result += term;
  }
  result = result.truncated_eps(order);
  if (x_power != 0) {
    result = result.map_coefficients([x_power](const EpsSeries& c) {
      return c.map_coefficients([x_power](const XLogPoly& p) { return p.times_x_pow(x_power); });
    });
  }
  return result;
}

}  // namespace guekdv
