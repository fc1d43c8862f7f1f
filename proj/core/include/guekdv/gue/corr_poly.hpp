#pragma once

#include "guekdv/rat.hpp"

#include <map>
#include <string>

namespace guekdv::gue {

/// Sparse polynomial in the matrix size N.
class CorrPolyN {
 public:
  using Terms = std::map<int, Rat>;

  CorrPolyN() = default;
  static CorrPolyN monomial(const Rat& c, int exponent);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rat coefficient(int exponent) const;
  void add_term(int exponent, const Rat& c);

  /// Value at N = 1 (for full correlators this counts matchings).
  [[nodiscard]] Rat at_one() const;

  CorrPolyN& operator+=(const CorrPolyN& o);
  CorrPolyN& operator-=(const CorrPolyN& o);
  CorrPolyN& operator*=(const Rat& c);
  friend CorrPolyN operator+(CorrPolyN a, const CorrPolyN& b) { return a += b; }
  friend CorrPolyN operator-(CorrPolyN a, const CorrPolyN& b) { return a -= b; }
  friend CorrPolyN operator*(CorrPolyN a, const Rat& c) { return a *= c; }
  friend CorrPolyN operator*(const CorrPolyN& a, const CorrPolyN& b);
  friend bool operator==(const CorrPolyN&, const CorrPolyN&) = default;

  /// "2*N^3 + N", highest power first; "0" when empty.
  [[nodiscard]] std::string str() const;

 private:
  Terms terms_;
};

}  // namespace guekdv::gue
