#include "doctest.h"

#include "guekdv/combinatorics.hpp"
#include "guekdv/errors.hpp"
#include "guekdv/gue/wick.hpp"

using namespace guekdv;
using namespace guekdv::gue;

TEST_CASE("full correlators") {
  CHECK(full_correlator({2}).str() == "N^2");
  CHECK(full_correlator({4}).str() == "2*N^3 + N");
  CHECK(full_correlator({3}).is_zero());
  CHECK_THROWS_AS(full_correlator({10, 8}), BoundExceeded);
  for (const IndexMultiset& i : {IndexMultiset{6}, IndexMultiset{3, 3}, IndexMultiset{2, 2, 4}}) {
    CHECK(full_correlator(i).at_one() == Rat(double_factorial(i.total() - 1)));
  }
}

TEST_CASE("connected correlators") {
  CHECK(connected_correlator({2, 2}).str() == "2*N^2");
  CHECK(connected_correlator({1, 1}).str() == "N");
  CHECK(connected_correlator({2}).str() == "N^2");
}

TEST_CASE("map counts") {
  CHECK(map_count(0, {4}) == 2);
  CHECK(map_count(1, {4}) == 1);
  CHECK(map_count(0, {4, 2}) == 8);
  CHECK(map_count(5, {4}) == 0);
  CHECK(map_count(0, {3}) == 0);
}

TEST_CASE("contraction recursion agrees with enumeration") {
  for (const IndexMultiset& i : enumerate_multisets(4, 12, 12)) {
    if (i.total() % 2 != 0) continue;
    CHECK_MESSAGE(connected_correlator_recursive(i) == connected_correlator(i), i.key());
  }
}

TEST_CASE("closed forms") {
  CHECK(catalan_onepoint(1) == 1);
  CHECK(catalan_onepoint(3) == 5);
  CHECK(catalan_onepoint(7) == 429);
  CHECK(map_count(0, {14}) == 429);
  CHECK(genus0_twopoint(1, 1, Parity::Even) == 2);
  CHECK(genus0_twopoint(1, 1, Parity::Odd) == 1);
  CHECK(genus0_twopoint(2, 1, Parity::Odd) == 3);
  CHECK(map_count(0, {3, 1}) == 3);
}

TEST_CASE("dilation") {
  CHECK(check_dilation(0, {}) == 0);
  CHECK(check_dilation(0, {4}) == 0);
  CHECK(check_dilation(1, {4}) == 0);
}

#include "guekdv/gue/free_energy.hpp"
#include "guekdv/gue/map_counter.hpp"

TEST_CASE("map counter backends agree") {
  MapCounter oracle(MapCounterOptions{16, false, false});
  MapCounter fast(MapCounterOptions{0, true, true});
  for (const IndexMultiset& i : enumerate_multisets(3, 10, 14)) {
    for (int g = 0; g <= i.max_genus(); ++g) CHECK(oracle.count(g, i) == fast.count(g, i));
  }
  CHECK_THROWS_AS(fast.insert(0, {4}, 3, Producer::Oracle), CacheConflict);
  CHECK_NOTHROW(fast.insert(0, {4}, 2, Producer::Resolvent));
}

TEST_CASE("free energy coefficients") {
  MapCounter mc;
  const SSeries F = assemble_gue_free_energy({INT_MAX, 2, 4, 10}, mc);
  CHECK(F.coefficient({2}).coefficient(-2) == XLogPoly::x_pow(2));
  CHECK(F.coefficient({1, 1}).coefficient(-2) == XLogPoly::monomial(Rat(1, 2), 1));
  CHECK(F.coefficient({1, 1}).coefficient(0).is_zero());
  const SSeries F6 = assemble_gue_free_energy({INT_MAX, 2, 4, 6}, mc);
  CHECK(F6.constant_term().coefficient(0) == XLogPoly::monomial(Rat(-1, 12), 0, 1) + XLogPoly::zeta_prime());
  CHECK(F6.constant_term().prec() == 6);
}

TEST_CASE("string and scaling equations at low order") {
  MapCounter mc;
  const SSeries F = assemble_gue_free_energy({INT_MAX, 3, 6, 20}, mc);
  const ResidualReport rep = verify_gue_pdes(F, 6);
  CHECK(rep.ok());
  for (const auto& f : rep.failures) MESSAGE(f.key << " " << f.value);
  CHECK(rep.checked > 50);
}
