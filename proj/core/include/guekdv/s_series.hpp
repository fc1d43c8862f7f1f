#pragma once

#include "guekdv/eps_series.hpp"

#include <climits>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace guekdv {

/// Monomial s_{i_1} ... s_{i_n} stored as its sorted index multiset.
using SMonomial = std::vector<int>;

/// Truncated power series in couplings s_1, s_2, ... with EpsSeries coefficients.
///
/// Only monomials of degree <= max_degree() built from indices <= max_index()
/// are represented; inside that window an absent monomial is an exact zero.
/// Differentiating in a coupling lowers the degree window by one.
class SSeries {
 public:
  using Terms = std::map<SMonomial, EpsSeries>;

  SSeries() = default;
  SSeries(int max_degree, int max_index) : max_degree_(max_degree), max_index_(max_index) {}
  /// Coupling-independent series.
  static SSeries constant(const EpsSeries& c, int max_degree, int max_index);

  [[nodiscard]] int max_degree() const { return max_degree_; }
  [[nodiscard]] int max_index() const { return max_index_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool in_window(const SMonomial& m) const;

  [[nodiscard]] EpsSeries coefficient(const SMonomial& m) const;
  [[nodiscard]] EpsSeries constant_term() const { return coefficient({}); }
  void add_term(const SMonomial& m, const EpsSeries& c);
  void set_term(const SMonomial& m, const EpsSeries& c);

  SSeries& operator+=(const SSeries& o);
  SSeries& operator-=(const SSeries& o);
  SSeries& operator*=(const Rat& c);
  friend SSeries operator+(SSeries a, const SSeries& b) { return a += b; }
  friend SSeries operator-(SSeries a, const SSeries& b) { return a -= b; }
  friend SSeries operator-(SSeries a) { return a *= Rat(-1); }
  friend SSeries operator*(SSeries a, const Rat& c) { return a *= c; }
  friend SSeries operator*(const SSeries& a, const SSeries& b);
  friend SSeries operator*(const SSeries& a, const EpsSeries& c);

  /// d/ds_i.
  [[nodiscard]] SSeries derivative_s(int i) const;
  /// Multiplication by s_i; the degree window grows by one.
  [[nodiscard]] SSeries times_coupling(int i) const;
  [[nodiscard]] SSeries derivative_x() const;
  [[nodiscard]] SSeries apply(const EpsDiffOperator& op, int order) const;
  [[nodiscard]] SSeries shift(long k, int order) const;
  [[nodiscard]] SSeries times_eps_pow(int k) const;
  [[nodiscard]] SSeries truncated_eps(int order) const;
  /// Narrows the window (degree and index bounds can only shrink).
  [[nodiscard]] SSeries restricted(int max_degree, int max_index) const;
  /// Sets every coupling with `keep(index) == false` to zero.
  [[nodiscard]] SSeries set_couplings_zero(const std::function<bool(int)>& keep) const;
  /// Series minus its coupling-free part.
  [[nodiscard]] SSeries without_constant() const;
  /// Coefficientwise eps^k slice, moved to eps^0.
  [[nodiscard]] SSeries eps_slice(int k) const;
  [[nodiscard]] SSeries map_coefficients(const std::function<EpsSeries(const EpsSeries&)>& f) const;

  /// Lowest coefficient precision in the series.
  [[nodiscard]] int min_prec() const;

 private:
  Terms terms_;
  // A default-constructed series is a zero that adopts any window.
  int max_degree_ = INT_MAX;
  int max_index_ = INT_MAX;
};

/// exp(a) truncated at eps^order. The coupling-free eps^0 part of `a` may
/// contain m*log(x) with integer m (giving the factor x^m); the rest of the
/// coupling-free part must have positive eps valuation.
SSeries exp_series(const SSeries& a, int order);

std::string monomial_key(const SMonomial& m);

}  // namespace guekdv
