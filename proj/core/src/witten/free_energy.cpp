#include "guekdv/witten/free_energy.hpp"

#include "guekdv/combinatorics.hpp"
#include "guekdv/errors.hpp"

#include <algorithm>

namespace guekdv::witten {

namespace {

void monomials_upto(int deg, int max_index, const std::function<void(const TSeries::Monomial&)>& f) {
  TSeries::Monomial cur;
  auto rec = [&](auto&& self, int lo) -> void {
    f(cur);
    if (static_cast<int>(cur.size()) == deg) return;
    for (int i = lo; i <= max_index; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

int degree_sum(const TSeries::Monomial& m) {
  int s = 0;
  for (int d : m) s += d - 1;
  return s;
}

BigInt automorphisms(const TSeries::Monomial& m) {
  BigInt sym = 1;
  for (std::size_t a = 0, run = 1; a < m.size(); ++a, ++run) {
    if (a + 1 == m.size() || m[a + 1] != m[a]) {
      sym *= factorial(static_cast<unsigned>(run));
      run = 0;
    }
  }
  return sym;
}

}  // namespace

Rat TSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void TSeries::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero() || static_cast<int>(m.size()) > max_degree_) return;
  if (!m.empty() && m.back() > max_index_) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TSeries& TSeries::operator+=(const TSeries& o) {
  max_degree_ = std::min(max_degree_, o.max_degree_);
  max_index_ = std::min(max_index_, o.max_index_);
  std::erase_if(terms_, [&](const auto& t) { return static_cast<int>(t.first.size()) > max_degree_; });
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) { return *this += o * Rat(-1); }

TSeries& TSeries::operator*=(const Rat& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  TSeries r(std::min(a.max_degree_, b.max_degree_), std::min(a.max_index_, b.max_index_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (static_cast<int>(ma.size() + mb.size()) > r.max_degree_) continue;
      TSeries::Monomial m;
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

TSeries TSeries::derivative(int d) const {
  TSeries r(max_degree_ - 1, max_index_);
  for (const auto& [m, c] : terms_) {
    const auto lo = std::lower_bound(m.begin(), m.end(), d);
    const auto hi = std::upper_bound(m.begin(), m.end(), d);
    if (lo == hi) continue;
    Monomial reduced(m.begin(), lo);
    reduced.insert(reduced.end(), lo + 1, m.end());
    r.add_term(reduced, c * Rat(static_cast<long>(hi - lo)));
  }
  return r;
}

TSeries TSeries::genus_part(int g) const {
  TSeries r(max_degree_, max_index_);
  for (const auto& [m, c] : terms_) {
    if (monomial_genus(m) == g) r.add_term(m, c);
  }
  return r;
}

int monomial_genus(const TSeries::Monomial& m) {
  const int s = degree_sum(m) + 3;
  if (s < 0 || s % 3 != 0) return -1;
  return s / 3;
}

std::string t_monomial_key(const TSeries::Monomial& m) {
  std::string k;
  for (std::size_t a = 0; a < m.size(); ++a) k += (a ? "," : "") + std::to_string(m[a]);
  return k;
}

TSeries witten_free_energy(int max_degree, int g_max, int max_index) {
  return witten_free_energy(max_degree, g_max, max_index,
                            {std::max(g_max, 1), std::max(4, std::min(max_degree, 3 * g_max - 3))});
}

TSeries witten_free_energy(int max_degree, int g_max, int max_index, const WittenOptions& opt) {
  TSeries F(max_degree, max_index);
  monomials_upto(max_degree, max_index, [&](const TSeries::Monomial& m) {
    const int g = monomial_genus(m);
    if (g < 0 || g > g_max) return;
    const Rat v = intersection_number(g, m, opt);
    if (!v.is_zero()) F.add_term(m, v / Rat(automorphisms(m)));
  });
  return F;
}

void record_t_zero(ResidualReport& rep, const std::string& label, const TSeries& r, int deg, int max_index,
                   int g_max, int shift) {
  monomials_upto(deg, max_index, [&](const TSeries::Monomial& m) {
    const int s = degree_sum(m) + shift;
    if (s >= 0 && s % 3 == 0 && s / 3 > g_max) return;
    const Rat c = r.coefficient(m);
    rep.record(label + "[" + t_monomial_key(m) + "]", c.is_zero(), c.str());
  });
}

ResidualReport verify_bilinear(int max_degree, int g_max, int max_index) {
  ResidualReport rep("bilinear");
  const TSeries F = witten_free_energy(max_degree, g_max, max_index);
  const TSeries F0 = F.derivative(0);
  const TSeries F00 = F0.derivative(0);
  const TSeries res = F0.derivative(1) - F00 * F00 * Rat(1, 2) - F00.derivative(0).derivative(0) * Rat(1, 12);
  record_t_zero(rep, "F", res, max_degree - 4, max_index, g_max, 2);
  return rep;
}

}  // namespace guekdv::witten
