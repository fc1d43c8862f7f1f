#pragma once

#include "guekdv/kdv/pdo.hpp"
#include "guekdv/report.hpp"
#include "guekdv/witten/free_energy.hpp"

#include <vector>

namespace guekdv::kdv {

/// u_k -> d_{t_0}^{k+2} F on a truncated Witten free energy.
class WittenJetEmbedding {
 public:
  explicit WittenJetEmbedding(witten::TSeries F) : F_(std::move(F)) {}

  const witten::TSeries& jet(int k);
  witten::TSeries evaluate(const DiffPoly& p);
  [[nodiscard]] const witten::TSeries& free_energy() const { return F_; }

 private:
  witten::TSeries F_;
  std::vector<witten::TSeries> jets_;
};

/// du/dt_d - kdv_flow_rhs(d) with u = F_{t_0 t_0}, on every monomial of degree
/// <= max_degree - 1 over t_0..t_{max(d, max_index)} and genus <= g_max.
ResidualReport verify_witten_kdv(int d, int max_degree, int g_max, int max_index = 2);

}  // namespace guekdv::kdv
