#include "doctest.h"

#include "guekdv/errors.hpp"
#include "guekdv/gue/map_counter.hpp"
#include "guekdv/volterra/even.hpp"

#include <climits>

using namespace guekdv;
using namespace guekdv::volterra;

namespace {

void show(const ResidualReport& r) {
  for (const auto& f : r.failures) MESSAGE(r.name << " " << f.key << " " << f.value);
}

}  // namespace

TEST_CASE("even free energy") {
  gue::MapCounter mc;
  const SSeries F = even_free_energy({INT_MAX, 2, 4, 8}, mc);
  CHECK(F.coefficient({1}).is_zero());
  CHECK(F.coefficient({2}).truncated(4) == EpsSeries(XLogPoly::x_pow(2), -2).truncated(4));
  // <tr M^2 tr M^2>_c = 2N^2 is pure genus 0; the 1/2! symmetry factor halves it.
  const EpsSeries c22 = F.coefficient({2, 2});
  CHECK(c22.coefficient(-2) == XLogPoly::x_pow(2));
  CHECK(c22.coefficient(0).is_zero());
}

TEST_CASE("Volterra lattice on the even free energy") {
  gue::MapCounter mc;
  const int order = 6;
  const SSeries full = gue::assemble_gue_free_energy({INT_MAX, 3, 4, 12}, mc);
  const ResidualReport v = verify_v_vanishes(full, order);
  CHECK(v.ok());
  CHECK(v.checked >= 6);
  const EvenSolution s = even_solution(full.set_couplings_zero([](int i) { return i % 2 == 0; }), order);
  CHECK(s.w.constant_term().truncated(order) == EpsSeries(XLogPoly::x_pow(1)).truncated(order));
  const ResidualReport vol = verify_volterra(s);
  show(vol);
  CHECK(vol.ok());
  const ResidualReport h1 = verify_volterra_hierarchy(s, 1);
  CHECK(h1.ok());
  CHECK(h1.checked == vol.checked);
  const ResidualReport h2 = verify_volterra_hierarchy(s, 2);
  show(h2);
  CHECK(h2.ok());
  CHECK(h2.checked >= 6);
  CHECK_THROWS_AS((void)verify_volterra_hierarchy(s, 3), BoundExceeded);
}

TEST_CASE("even GUE free energy identities") {
  gue::MapCounter mc;
  const int order = 8;
  const EvenSolution s = even_solution(even_free_energy({INT_MAX, 3, 6, 14}, mc), order);
  const ResidualReport r = verify_feg_identities(s, 2);
  show(r);
  CHECK(r.ok());
  CHECK(r.checked > 50);
  MESSAGE(r.checked);
}
