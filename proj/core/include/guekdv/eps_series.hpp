#pragma once

#include "guekdv/xlog_poly.hpp"

#include <climits>
#include <functional>
#include <map>
#include <string>

namespace guekdv {

/// Laurent series in epsilon with XLogPoly coefficients.
///
/// `prec()` is the highest epsilon power whose coefficient is known exactly;
/// everything above is an unknown O(eps^{prec+1}) tail. Exact (terminating)
/// series carry `kExact`. Arithmetic propagates precision, so truncation can
/// never leak into a coefficient that is reported as known.
class EpsSeries {
 public:
  static constexpr int kExact = INT_MAX;
  using Terms = std::map<int, XLogPoly>;

  EpsSeries() = default;
  EpsSeries(const XLogPoly& c, int power = 0, int prec = kExact);  // NOLINT(google-explicit-constructor)
  EpsSeries(const Rat& c) : EpsSeries(XLogPoly(c)) {}             // NOLINT(google-explicit-constructor)
  EpsSeries(int c) : EpsSeries(XLogPoly(c)) {}                    // NOLINT(google-explicit-constructor)

  /// Zero series known only up to eps^prec.
  static EpsSeries zero_to(int prec);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] int prec() const { return prec_; }
  [[nodiscard]] bool is_exact() const { return prec_ == kExact; }
  /// Lowest stored power; prec()+1 for an inexact zero, kExact for an exact zero.
  [[nodiscard]] int valuation() const;
  /// True when every known coefficient is zero.
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Coefficient of eps^k; throws TruncationMismatch above the precision.
  [[nodiscard]] XLogPoly coefficient(int k) const;
  void add_term(int power, const XLogPoly& c);

  /// Drops powers above `order` and caps the precision there.
  [[nodiscard]] EpsSeries truncated(int order) const;
  [[nodiscard]] EpsSeries times_eps_pow(int k) const;
  [[nodiscard]] EpsSeries derivative_x() const;
  /// Maps every coefficient through `f`, keeping the precision.
  [[nodiscard]] EpsSeries map_coefficients(const std::function<XLogPoly(const XLogPoly&)>& f) const;

  EpsSeries& operator+=(const EpsSeries& o);
  EpsSeries& operator-=(const EpsSeries& o);
  EpsSeries& operator*=(const Rat& c);
  friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
  friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
  friend EpsSeries operator-(EpsSeries a) { return a *= Rat(-1); }
  friend EpsSeries operator*(EpsSeries a, const Rat& c) { return a *= c; }
  friend EpsSeries operator*(const Rat& c, EpsSeries a) { return a *= c; }
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
  friend bool operator==(const EpsSeries&, const EpsSeries&) = default;

  [[nodiscard]] std::string str() const;

 private:
  Terms terms_;
  int prec_ = kExact;
};

/// Formal operator sum_m c_m eps^{m+eps_offset} d_x^m over m >= min_order.
///
/// Shifts, finite differences and the Bernoulli expansion of
/// eps (Lambda-1)/(Lambda+1) are all of this form.
struct EpsDiffOperator {
  std::function<Rat(unsigned)> coefficient;
  unsigned min_order = 0;
  int eps_offset = 0;
};

/// Applies `op` to `f`, keeping powers up to `order`. The result is exact
/// when the expansion terminates on every term of an exact input.
EpsSeries apply_operator(const EpsDiffOperator& op, const EpsSeries& f, int order);

EpsDiffOperator shift_operator(long k);        ///< Lambda^k = exp(k eps d_x)
EpsDiffOperator forward_difference();          ///< Lambda - 1
EpsDiffOperator backward_difference();         ///< 1 - Lambda^{-1}
EpsDiffOperator second_difference();           ///< (Lambda - 1)(1 - Lambda^{-1})
EpsDiffOperator tanh_half();                   ///< eps (Lambda - 1)/(Lambda + 1)

/// sum_m (k eps)^m d_x^m f / m!, truncated at eps^order.
EpsSeries taylor_shift(const EpsSeries& f, long k, int order);
/// sum_g eps^{2g+2} (2^{2g+3}-2) B_{2g+2}/(2g+2)! d_x^{2g+1} f, truncated at eps^order.
EpsSeries tanh_half_operator(const EpsSeries& f, int order);

}  // namespace guekdv
