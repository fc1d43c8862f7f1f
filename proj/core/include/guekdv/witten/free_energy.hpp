#pragma once

#include "guekdv/rat.hpp"
#include "guekdv/report.hpp"
#include "guekdv/witten/npoint.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace guekdv::witten {

/// Truncated power series in t_0..t_{max_index}. A monomial is the sorted
/// multiset of its indices; monomials of degree <= max_degree are exact.
class TSeries {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, Rat>;

  TSeries() = default;
  TSeries(int max_degree, int max_index) : max_degree_(max_degree), max_index_(max_index) {}

  [[nodiscard]] int max_degree() const { return max_degree_; }
  [[nodiscard]] int max_index() const { return max_index_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] Rat coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rat& c);

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const Rat& c);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(TSeries a, const Rat& c) { return a *= c; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);

  /// d/dt_d; the degree window drops by one.
  [[nodiscard]] TSeries derivative(int d) const;
  /// Only the terms of genus g, where 3g - 3 = sum_a (d_a - 1) over the monomial.
  [[nodiscard]] TSeries genus_part(int g) const;

 private:
  Terms terms_;
  int max_degree_ = 0;
  int max_index_ = 0;
};

/// Genus of a monomial as a term of the free energy, or -1 off the lattice.
int monomial_genus(const TSeries::Monomial& m);

/// sum <tau_d>_g / |Aut| t^d over degree <= max_degree, indices <= max_index,
/// genus <= g_max. The budget defaults to what the window requires.
TSeries witten_free_energy(int max_degree, int g_max, int max_index);
TSeries witten_free_energy(int max_degree, int g_max, int max_index, const WittenOptions& opt);

/// F_{t_1 t_0} - F_{t_0 t_0}^2/2 - F_{t_0^4}/12 on every monomial of genus <= g_max
/// and degree <= max_degree - 4 over t_0..t_{max_index}.
ResidualReport verify_bilinear(int max_degree, int g_max, int max_index = 3);

/// Records every monomial over t_0..t_{max_index} of degree <= deg whose
/// genus (sum_a (d_a - 1) + shift)/3 is at most g_max; off-lattice monomials
/// are checked as well.
void record_t_zero(ResidualReport& rep, const std::string& label, const TSeries& r, int deg, int max_index,
                   int g_max, int shift);

std::string t_monomial_key(const TSeries::Monomial& m);

}  // namespace guekdv::witten
