#pragma once

#include "guekdv/gue/map_counter.hpp"
#include "guekdv/report.hpp"
#include "guekdv/s_series.hpp"

#include <climits>
#include <vector>

namespace guekdv::gue {

struct GueFreeEnergyParams {
  int g_max = INT_MAX;  ///< highest genus kept
  int n_max = 3;        ///< highest coupling degree
  int i_max = 8;        ///< highest coupling index
  int eps_order = 10;  ///< the coupling-free part needs a finite order
};

/// Free energy with map-count coefficients and the coupling-free part
/// x^2/(2 eps^2)(log x - 3/2) - log(x)/12 + zeta'(-1) + sum_{g>=2} eps^{2g-2} B_{2g}/(4g(g-1) x^{2g-2}).
/// Coefficients are exact when every genus fits under g_max and eps_order;
/// otherwise their precision records where the dropped genera start.
SSeries assemble_gue_free_energy(const GueFreeEnergyParams& p, MapCounter& counter);

/// Only the coupling-free part, through genus g_max and eps^eps_order.
EpsSeries gue_free_energy_constant(int g_max, int eps_order);

/// Monomials of degree <= max_degree over indices <= max_index, including 1.
std::vector<SMonomial> window_monomials(int max_degree, int max_index, bool even_only = false);

/// Records every eps^k coefficient (k <= eps_order) of `r` on `monomials`.
void record_zero(ResidualReport& rep, const std::string& label, const SSeries& r,
                 const std::vector<SMonomial>& monomials, int eps_order);

/// String and scaling equations on Zhat = exp(F - F|_{s=0}), which differs
/// from the partition function by a coupling-free factor. Checked on every
/// monomial of degree < deg(F) up to eps^eps_order.
ResidualReport verify_gue_pdes(const SSeries& F, int eps_order);

}  // namespace guekdv::gue
