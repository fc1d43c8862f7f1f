#pragma once

#include "guekdv/gue/free_energy.hpp"
#include "guekdv/report.hpp"
#include "guekdv/s_series.hpp"

namespace guekdv::volterra {

/// Free energy with every odd coupling set to zero, and
/// w = exp((Lambda - 1)(1 - Lambda^{-1}) F).
struct EvenSolution {
  SSeries F;
  SSeries w;
  int eps_order = 0;
};

/// F^G restricted to s_odd = 0. Only even couplings up to p.i_max appear.
SSeries even_free_energy(const gue::GueFreeEnergyParams& p, gue::MapCounter& counter);

EvenSolution even_solution(const SSeries& F_even, int eps_order);

/// v = eps (Lambda - 1) dF/ds_1 of the full free energy vanishes at s_odd = 0.
ResidualReport verify_v_vanishes(const SSeries& F, int eps_order);

/// eps dw/ds_2 = w (Lambda w - Lambda^{-1} w).
ResidualReport verify_volterra(const EvenSolution& s);

/// eps dw/ds_{2j} against the Lambda^{-1} part of [(L_e^{2j})_+, L_e], j = 1, 2.
ResidualReport verify_volterra_hierarchy(const EvenSolution& s, int j);

/// The tanh-operator identities for dF/ds_2, their normalized form and the
/// per-genus identity for h <= h_max.
ResidualReport verify_feg_identities(const EvenSolution& s, int h_max = 2);

}  // namespace guekdv::volterra
