#pragma once

#include "guekdv/rat.hpp"

#include <climits>
#include <map>
#include <string>
#include <vector>

namespace guekdv::kdv {

/// Polynomial in the jets u_0 = u, u_1 = u', u_2, ... A monomial is the
/// sorted list of jet orders of its factors.
class DiffPoly {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, Rat>;

  DiffPoly() = default;
  DiffPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  /// u_k.
  static DiffPoly jet(int k);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rat coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rat& c);

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const Rat& c);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator-(DiffPoly a) { return a *= Rat(-1); }
  friend DiffPoly operator*(DiffPoly a, const Rat& c) { return a *= c; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

  /// D_x u_k = u_{k+1}, extended by Leibniz.
  [[nodiscard]] DiffPoly dx() const;
  /// Common weight with u_k of weight k+2; -1 when the terms disagree, 0 for zero.
  [[nodiscard]] int weight() const;
  [[nodiscard]] std::string str() const;

 private:
  Terms terms_;
};

/// Pseudodifferential operator sum_k a_k d^k. Orders below -depth() are not
/// represented; kExact marks an operator with no dropped tail.
class PsiDO {
 public:
  static constexpr int kExact = INT_MAX;
  using Terms = std::map<int, DiffPoly>;

  PsiDO() = default;
  explicit PsiDO(int depth) : depth_(depth) {}
  /// d^k as an exact operator.
  static PsiDO d(int k);
  /// Multiplication by a, exact.
  static PsiDO multiplication(const DiffPoly& a);

  [[nodiscard]] int depth() const { return depth_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] DiffPoly coefficient(int k) const;
  void add_term(int k, const DiffPoly& a);
  /// Highest order present, or INT_MIN for zero.
  [[nodiscard]] int max_order() const;
  [[nodiscard]] int min_order() const;

  PsiDO& operator+=(const PsiDO& o);
  PsiDO& operator-=(const PsiDO& o);
  friend PsiDO operator+(PsiDO a, const PsiDO& b) { return a += b; }
  friend PsiDO operator-(PsiDO a, const PsiDO& b) { return a -= b; }

  /// Orders >= 0; throws DepthExceeded when part of them was dropped.
  [[nodiscard]] PsiDO positive_part() const;
  /// Drops orders below -depth.
  [[nodiscard]] PsiDO truncated(int depth) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string str() const;

 private:
  Terms terms_;
  int depth_ = kExact;
};

/// P o Q with d^k o a = sum_j binom(k, j) D_x^j(a) d^{k-j}. The result is known
/// down to order -min(depth(P) - max_order(Q), depth(Q) - max_order(P)).
/// Throws DepthExceeded when that leaves an infinite expansion untruncated.
PsiDO pdo_compose(const PsiDO& P, const PsiDO& Q);

PsiDO pdo_pow(const PsiDO& P, unsigned k);

/// L = d^2 + 2u.
PsiDO lax_operator();

/// S = d + sum_{k<=0} s_k d^k with S o S = L through d^{-depth+1}.
PsiDO lax_sqrt(int depth);

/// [(L^{(2d+1)/2})_+, L] / (2 (2d+1)!!). The commutator is 2 du/dt_d times
/// (2d+1)!!, so this is the right side of du/dt_d. Depth defaults to 2d+4.
DiffPoly kdv_flow_rhs(int d, int depth = 0, int d_max = 3);

}  // namespace guekdv::kdv
