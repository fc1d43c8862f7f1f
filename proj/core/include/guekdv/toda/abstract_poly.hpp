#pragma once

#include "guekdv/rat.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace guekdv::toda {

/// Lattice symbol v_m or w_m.
struct Symbol {
  bool is_w = false;
  int shift = 0;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

inline Symbol v_sym(int m) { return {false, m}; }
inline Symbol w_sym(int m) { return {true, m}; }

/// Integer polynomial in the lattice symbols v_m, w_m (m in Z).
class AbstractPoly {
 public:
  /// Sorted (symbol, exponent) pairs with positive exponents.
  using Monomial = std::vector<std::pair<Symbol, int>>;
  using Terms = std::map<Monomial, BigInt>;

  AbstractPoly() = default;
  AbstractPoly(long c);  // NOLINT(google-explicit-constructor)
  static AbstractPoly symbol(Symbol s);
  static AbstractPoly v(int m) { return symbol(v_sym(m)); }
  static AbstractPoly w(int m) { return symbol(w_sym(m)); }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  void add_term(const Monomial& m, const BigInt& c);

  /// Applies Lambda^k: every index m becomes m + k.
  [[nodiscard]] AbstractPoly shifted(int k) const;
  [[nodiscard]] AbstractPoly derivative(Symbol s) const;
  /// Smallest and largest lattice index referenced; {0, 0} for constants.
  [[nodiscard]] std::pair<int, int> window() const;
  [[nodiscard]] bool has_integer_coefficients() const { return true; }

  AbstractPoly& operator+=(const AbstractPoly& o);
  AbstractPoly& operator-=(const AbstractPoly& o);
  friend AbstractPoly operator+(AbstractPoly a, const AbstractPoly& b) { return a += b; }
  friend AbstractPoly operator-(AbstractPoly a, const AbstractPoly& b) { return a -= b; }
  friend AbstractPoly operator-(const AbstractPoly& a);
  friend AbstractPoly operator*(const AbstractPoly& a, const AbstractPoly& b);
  friend bool operator==(const AbstractPoly&, const AbstractPoly&) = default;

  /// e.g. "w_0*v_-1 - w_0*v_0"; "0" when empty.
  [[nodiscard]] std::string str() const;

 private:
  Terms terms_;
};

/// Finite sum sum_m P_m Lambda^m with AbstractPoly coefficients.
class LatticeOp {
 public:
  using Terms = std::map<int, AbstractPoly>;

  LatticeOp() = default;
  static LatticeOp shift(int m, const AbstractPoly& coeff = AbstractPoly(1));
  /// Lambda + v_0 + w_0 Lambda^{-1}
  static LatticeOp toda_lax();
  /// Lambda + w_0 Lambda^{-1}
  static LatticeOp volterra_lax();

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] AbstractPoly coefficient(int m) const;
  void add_term(int m, const AbstractPoly& c);

  /// Part with shift degree >= 0.
  [[nodiscard]] LatticeOp positive_part() const;
  [[nodiscard]] LatticeOp pow(unsigned k) const;

  LatticeOp& operator+=(const LatticeOp& o);
  LatticeOp& operator-=(const LatticeOp& o);
  friend LatticeOp operator+(LatticeOp a, const LatticeOp& b) { return a += b; }
  friend LatticeOp operator-(LatticeOp a, const LatticeOp& b) { return a -= b; }
  /// (P Lambda^a)(Q Lambda^b) = P Lambda^a(Q) Lambda^{a+b}
  friend LatticeOp operator*(const LatticeOp& a, const LatticeOp& b);

 private:
  Terms terms_;
};

}  // namespace guekdv::toda
