#include "guekdv/homog_poly.hpp"

#include "guekdv/errors.hpp"

#include <algorithm>
#include <numeric>

namespace guekdv {

HomogPoly HomogPoly::constant(int nvars, const Rat& c) {
  HomogPoly p(nvars, 0);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

HomogPoly HomogPoly::linear_sum(int nvars, std::span<const int> vars) {
  HomogPoly p(nvars, 1);
  for (int v : vars) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(v)) = 1;
    p.add_term(e, Rat(1));
  }
  return p;
}

HomogPoly HomogPoly::monomial(const Rat& c, Exponents exps) {
  HomogPoly p(static_cast<int>(exps.size()), std::accumulate(exps.begin(), exps.end(), 0));
  p.add_term(exps, c);
  return p;
}

Rat HomogPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat() : it->second;
}

void HomogPoly::add_term(const Exponents& e, const Rat& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != nvars_) throw Error("HomogPoly: exponent length mismatch");
  const int d = std::accumulate(e.begin(), e.end(), 0);
  if (terms_.empty()) {
    degree_ = d;
  } else if (d != degree_) {
    throw Error("HomogPoly: term of degree " + std::to_string(d) + " added to degree " + std::to_string(degree_));
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
  if (o.nvars_ != nvars_) throw Error("HomogPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) {
  if (o.nvars_ != nvars_) throw Error("HomogPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HomogPoly& HomogPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error("HomogPoly: variable count mismatch");
  HomogPoly r(a.nvars_, a.degree_ + b.degree_);
  HomogPoly::Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

HomogPoly HomogPoly::pow(unsigned k) const {
  HomogPoly r = constant(nvars_, Rat(1));
  HomogPoly base = *this;
  while (k != 0) {
    if (k & 1U) r = r * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return r;
}

HomogPoly HomogPoly::embed(int nvars, std::span<const int> target) const {
  if (static_cast<int>(target.size()) != nvars_) throw Error("HomogPoly::embed: target size mismatch");
  HomogPoly r(nvars, degree_);
  for (const auto& [e, c] : terms_) {
    Exponents f(static_cast<std::size_t>(nvars), 0);
    for (std::size_t k = 0; k < e.size(); ++k) f.at(static_cast<std::size_t>(target[k])) += e[k];
    r.add_term(f, c);
  }
  return r;
}

HomogPoly HomogPoly::set_zero(std::span<const int> vars) const {
  std::vector<bool> drop(static_cast<std::size_t>(nvars_), false);
  for (int v : vars) drop.at(static_cast<std::size_t>(v)) = true;
  const int kept = nvars_ - static_cast<int>(std::count(drop.begin(), drop.end(), true));
  HomogPoly r(kept, degree_);
  for (const auto& [e, c] : terms_) {
    bool vanishes = false;
    Exponents f;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (drop[k]) {
        vanishes = vanishes || e[k] != 0;
      } else {
        f.push_back(e[k]);
      }
    }
    if (!vanishes) r.add_term(f, c);
  }
  return r;
}

HomogPoly HomogPoly::permuted(std::span<const int> perm) const { return embed(nvars_, perm); }

Rat HomogPoly::evaluate(std::span<const Rat> point) const {
  Rat total;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t k = 0; k < e.size(); ++k) t *= guekdv::pow(point[k], static_cast<unsigned>(e[k]));
    total += t;
  }
  return total;
}

bool HomogPoly::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.sign() > 0; });
}

std::string HomogPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // descending lex order reads like the usual leading-term-first display
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.str();
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      if (it->first[k] == 0) continue;
      out += "*x" + std::to_string(k + 1);
      if (it->first[k] > 1) out += "^" + std::to_string(it->first[k]);
    }
  }
  return out;
}

HomogPoly poly_exact_div(const HomogPoly& num, const HomogPoly& den) {
  if (den.is_zero()) throw std::domain_error("poly_exact_div: zero divisor");
  if (num.nvars() != den.nvars()) throw Error("poly_exact_div: variable count mismatch");
  HomogPoly quotient(num.nvars(), num.degree() - den.degree());
  if (num.is_zero()) return quotient;
  // lex leading terms: the greatest key in the map
  const auto& [lead_e, lead_c] = *den.terms().rbegin();
  HomogPoly rem = num;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    HomogPoly::Exponents qe(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) {
      qe[k] = re[k] - lead_e[k];
      if (qe[k] < 0) throw NonExactDivision("poly_exact_div: nonzero remainder (" + rem.str() + ")");
    }
    const HomogPoly step = HomogPoly::monomial(rc / lead_c, qe);
    quotient += step;
    rem -= step * den;
  }
  return quotient;
}

}  // namespace guekdv
