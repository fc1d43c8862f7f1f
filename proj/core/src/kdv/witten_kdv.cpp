#include "guekdv/kdv/witten_kdv.hpp"

#include <algorithm>

namespace guekdv::kdv {

const witten::TSeries& WittenJetEmbedding::jet(int k) {
  if (jets_.empty()) jets_.push_back(F_.derivative(0).derivative(0));
  while (static_cast<int>(jets_.size()) <= k) jets_.push_back(jets_.back().derivative(0));
  return jets_[static_cast<std::size_t>(k)];
}

witten::TSeries WittenJetEmbedding::evaluate(const DiffPoly& p) {
  witten::TSeries r(F_.max_degree(), F_.max_index());
  for (const auto& [m, c] : p.terms()) {
    witten::TSeries term(F_.max_degree(), F_.max_index());
    term.add_term({}, Rat(1));
    for (int k : m) term = term * jet(k);
    r += term * c;
  }
  return r;
}

ResidualReport verify_witten_kdv(int d, int max_degree, int g_max, int max_index) {
  ResidualReport rep("witten_kdv.d" + std::to_string(d));
  const int K = std::max(d, max_index);
  // u_{2d+1} = d_{t_0}^{2d+3} F must be exact through degree max_degree - 1.
  WittenJetEmbedding emb(witten::witten_free_energy(max_degree + 2 * d + 2, g_max, K));
  const DiffPoly rhs = kdv_flow_rhs(d);
  const witten::TSeries res = emb.jet(0).derivative(d) - emb.evaluate(rhs);
  witten::record_t_zero(rep, "u", res, max_degree - 1, K, g_max, d);
  rep.notes["rhs"] = rhs.str();
  return rep;
}

}  // namespace guekdv::kdv
