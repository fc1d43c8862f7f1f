#pragma once

#include "guekdv/rat.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace guekdv {

/// Homogeneous polynomial in x_1..x_n with rational coefficients.
///
/// Every stored monomial has total degree exactly `degree()`. The zero
/// polynomial keeps the degree it was created with but combines with
/// polynomials of any degree.
class HomogPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rat>;

  HomogPoly() = default;
  HomogPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

  static HomogPoly constant(int nvars, const Rat& c);
  /// Sum of the listed variables (0-based indices).
  static HomogPoly linear_sum(int nvars, std::span<const int> vars);
  static HomogPoly monomial(const Rat& c, Exponents exps);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rat coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rat& c);

  HomogPoly& operator+=(const HomogPoly& o);
  HomogPoly& operator-=(const HomogPoly& o);
  HomogPoly& operator*=(const Rat& c);
  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator*(HomogPoly a, const Rat& c) { return a *= c; }
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_ && (a.is_zero() || a.degree_ == b.degree_);
  }

  [[nodiscard]] HomogPoly pow(unsigned k) const;
  /// Re-expresses the polynomial in `nvars` variables, sending variable k to `target[k]`.
  [[nodiscard]] HomogPoly embed(int nvars, std::span<const int> target) const;
  /// Substitutes x_k = 0 for every listed variable and drops them, keeping the
  /// remaining variables in order.
  [[nodiscard]] HomogPoly set_zero(std::span<const int> vars) const;
  /// Applies a permutation of the variables: x_k becomes x_perm[k].
  [[nodiscard]] HomogPoly permuted(std::span<const int> perm) const;
  [[nodiscard]] Rat evaluate(std::span<const Rat> point) const;
  [[nodiscard]] bool all_coefficients_positive() const;

  [[nodiscard]] std::string str() const;

 private:
  int nvars_ = 0;
  int degree_ = 0;
  Terms terms_;
};

/// Exact quotient num / den; throws NonExactDivision on a nonzero remainder.
HomogPoly poly_exact_div(const HomogPoly& num, const HomogPoly& den);

}  // namespace guekdv
