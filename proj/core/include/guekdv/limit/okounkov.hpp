#pragma once

#include "guekdv/gue/map_counter.hpp"
#include "guekdv/gue/wick.hpp"
#include "guekdv/rat.hpp"

#include <string>
#include <vector>

namespace guekdv::limit {

/// Working precision of the extended-precision evaluation, in decimal digits.
inline constexpr int kFloatDigits = 50;

/// i_a = 2 round(kappa x_a / 2) for even parity, 2 round((kappa x_a + 1)/2) - 1
/// for odd parity; rounding is half-up. Odd parity needs an even number of entries.
std::vector<int> round_indices(const std::vector<Rat>& x, const Rat& kappa, gue::Parity parity);

/// Q_g(x) at a rational point, with Q_0(x) = 1/x^2, Q_0(x_1, x_2) = 1/(x_1 + x_2)
/// and zero for n = 0.
Rat witten_q_value(int g, const std::vector<Rat>& x);

struct ScaledValue {
  std::vector<int> indices;
  double value = 0;
  /// The same value at the working precision.
  std::string digits;
};

/// 2^{2g-3+3n/2} pi^{n/2} / sqrt(x_1..x_n) * Map_g(i) / (2^{|i|} kappa^{3g-3+3n/2}).
/// Genus-0 one- and two-point counts come from closed forms through log-Gamma;
/// every other count comes from `counter`.
ScaledValue okounkov_scaled_value(int g, const std::vector<Rat>& x, const Rat& kappa, gue::MapCounter& counter,
                                  gue::Parity parity = gue::Parity::Even);

struct ConvergenceRow {
  Rat kappa;
  std::vector<int> indices;
  double scaled_value = 0;
  double limit = 0;
  double rel_error = 0;
};

struct ConvergenceReport {
  int g = 0;
  std::vector<Rat> x;
  gue::Parity parity = gue::Parity::Even;
  Rat limit;
  std::vector<ConvergenceRow> rows;

  /// Columns kappa, indices, scaled_value, limit, rel_error; indices joined by ';'.
  [[nodiscard]] std::string csv(int digits = 17) const;
};

/// Scaled values along the ladder, in ladder order. One-point counts for the
/// largest index are fetched from a single resolvent solve up front.
ConvergenceReport okounkov_convergence_report(int g, const std::vector<Rat>& x, const std::vector<Rat>& ladder,
                                              gue::MapCounter& counter, gue::Parity parity = gue::Parity::Even);

/// printf-style %.*g formatting shared by the CSV and JSON writers.
std::string format_double(double v, int digits);

}  // namespace guekdv::limit
