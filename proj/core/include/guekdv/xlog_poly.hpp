#pragma once

#include "guekdv/rat.hpp"

#include <compare>
#include <map>
#include <string>

namespace guekdv {

/// Exponent triple of a term x^x_exp (log x)^log_deg zeta'(-1)^zeta_deg.
struct XLogKey {
  int x_exp = 0;
  int log_deg = 0;
  int zeta_deg = 0;
  friend auto operator<=>(const XLogKey&, const XLogKey&) = default;
};

/// Sparse sum of terms c * x^p (log x)^q zeta'(-1)^z with z in {0, 1}.
///
/// log x and zeta'(-1) stay symbolic: d/dx log x = 1/x and d/dx zeta'(-1) = 0.
/// Zero coefficients are never stored.
class XLogPoly {
 public:
  using Terms = std::map<XLogKey, Rat>;

  XLogPoly() = default;
  XLogPoly(const Rat& c) { add_term({}, c); }  // NOLINT(google-explicit-constructor)
  XLogPoly(int c) : XLogPoly(Rat(c)) {}        // NOLINT(google-explicit-constructor)

  static XLogPoly monomial(const Rat& c, int x_exp, int log_deg = 0, int zeta_deg = 0);
  static XLogPoly x_pow(int p) { return monomial(Rat(1), p); }
  static XLogPoly log_x() { return monomial(Rat(1), 0, 1); }
  static XLogPoly zeta_prime() { return monomial(Rat(1), 0, 0, 1); }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Rat coefficient(const XLogKey& k) const;
  /// True when no log x or zeta'(-1) factors occur.
  [[nodiscard]] bool is_laurent() const;

  void add_term(const XLogKey& k, const Rat& c);

  XLogPoly& operator+=(const XLogPoly& o);
  XLogPoly& operator-=(const XLogPoly& o);
  XLogPoly& operator*=(const Rat& c);
  friend XLogPoly operator+(XLogPoly a, const XLogPoly& b) { return a += b; }
  friend XLogPoly operator-(XLogPoly a, const XLogPoly& b) { return a -= b; }
  friend XLogPoly operator-(XLogPoly a) { return a *= Rat(-1); }
  friend XLogPoly operator*(XLogPoly a, const Rat& c) { return a *= c; }
  friend XLogPoly operator*(const Rat& c, XLogPoly a) { return a *= c; }
  friend XLogPoly operator*(const XLogPoly& a, const XLogPoly& b);
  friend bool operator==(const XLogPoly&, const XLogPoly&) = default;

  /// Multiplies by x^k.
  [[nodiscard]] XLogPoly times_x_pow(int k) const;
  [[nodiscard]] XLogPoly derivative() const;

  /// Canonical text form, terms in ascending key order; "0" when empty.
  [[nodiscard]] std::string str() const;

 private:
  Terms terms_;
};

}  // namespace guekdv
