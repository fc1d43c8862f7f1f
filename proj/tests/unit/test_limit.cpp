#include "doctest.h"

#include "guekdv/combinatorics.hpp"
#include "guekdv/errors.hpp"
#include "guekdv/limit/identities.hpp"
#include "guekdv/limit/okounkov.hpp"

#include <cmath>

using namespace guekdv;
using namespace guekdv::limit;

TEST_CASE("index rounding") {
  CHECK(round_indices({Rat(1), Rat(2)}, Rat(10), gue::Parity::Even) == std::vector<int>{10, 20});
  CHECK(round_indices({Rat(1, 3)}, Rat(10), gue::Parity::Even) == std::vector<int>{4});
  CHECK(round_indices({Rat(1), Rat(1)}, Rat(10), gue::Parity::Odd) == std::vector<int>{11, 11});
  CHECK_THROWS_AS((void)round_indices({Rat(1)}, Rat(10), gue::Parity::Odd), Error);
}

TEST_CASE("generalized binomials with negative upper argument") {
  CHECK(gen_binom(-1, 3) == Rat(-1));
  CHECK(gen_binom(-2, 2) == Rat(3));
  CHECK(gen_binom(1, 3) == Rat(0));
}

TEST_CASE("exact identities on small grids") {
  gue::MapCounter mc;
  CHECK(pre_identity_sides(0, {}, mc) == std::pair<Rat, Rat>{Rat(1), Rat(1)});
  // 1 * (2*3*Map_0(4,2)) * binom(3,2) on the left.
  CHECK(pre_identity_sides(0, {2, 1}, mc) == std::pair<Rat, Rat>{Rat(144), Rat(144)});
  for (int h = 0; h <= 3; ++h) CHECK(pre_identity_residual(h, {}, mc).is_zero());
  CHECK(eq56_residual(0, {2}, mc).is_zero());
  CHECK(eq56_residual(1, {2}, mc).is_zero());
  CHECK(eq56_residual(0, {2, 1}, mc).is_zero());
  const ResidualReport r = verify_central_identities(1, 2, 10, mc);
  CHECK(r.ok());
  CHECK(r.checked > 40);
  for (const auto& f : r.failures) MESSAGE(f.key << " " << f.value);
  // A genus-2 slice of the pre-identity with three insertions.
  CHECK(pre_identity_residual(2, {1, 1, 2}, mc).is_zero());
  CHECK(eq56_residual(2, {1, 2, 2}, mc).is_zero());
}

TEST_CASE("Okounkov limit, genus zero") {
  gue::MapCounter mc;
  const ScaledValue one = okounkov_scaled_value(0, {Rat(1)}, Rat(10000), mc);
  CHECK(std::abs(one.value - 1.0) < 1e-2);
  const ScaledValue even = okounkov_scaled_value(0, {Rat(1), Rat(1)}, Rat(10000), mc);
  const ScaledValue odd = okounkov_scaled_value(0, {Rat(1), Rat(1)}, Rat(10000), mc, gue::Parity::Odd);
  CHECK(std::abs(even.value - 0.5) < 1e-2);
  CHECK(std::abs(odd.value - 0.5) < 1e-2);
  // Closed forms agree with the exact counts at small indices.
  const ScaledValue small = okounkov_scaled_value(0, {Rat(1), Rat(2)}, Rat(6), mc);
  gue::MapCounter exact({0, false, false});
  const double direct = std::pow(2.0, 0.0) * M_PI / std::sqrt(2.0) *
                        static_cast<double>(gue::genus0_twopoint(3, 6, gue::Parity::Even).get_si()) /
                        std::pow(2.0, 18) / std::pow(6.0, 0.0);
  CHECK(small.value == doctest::Approx(direct).epsilon(1e-12));
  const ConvergenceReport rep = okounkov_convergence_report(0, {Rat(1)}, {Rat(100), Rat(1000), Rat(10000)}, mc);
  CHECK(rep.rows.size() == 3);
  CHECK(rep.rows[0].rel_error > rep.rows[1].rel_error);
  CHECK(rep.rows[1].rel_error > rep.rows[2].rel_error);
  CHECK(rep.csv().rfind("kappa,indices,scaled_value,limit,rel_error\n", 0) == 0);
}

TEST_CASE("Okounkov limit, genus one") {
  gue::MapCounter mc;
  const ConvergenceReport rep =
      okounkov_convergence_report(1, {Rat(1)}, {Rat(250), Rat(500), Rat(1000), Rat(2000)}, mc);
  CHECK(rep.limit == Rat(1, 24));
  for (std::size_t k = 1; k < rep.rows.size(); ++k) CHECK(rep.rows[k].rel_error < rep.rows[k - 1].rel_error);
  CHECK(rep.rows.back().rel_error < 0.05);
  MESSAGE(rep.csv());
}

TEST_CASE("limit of the five-block identity") {
  gue::MapCounter mc;
  const IdentityLimitReport r = limit_of_identity_demo(1, {Rat(1)}, {Rat(40), Rat(80), Rat(160)}, mc);
  CHECK(r.lhs_limit == r.rhs_limit);
  CHECK(r.lhs_limit == Rat(1, 24));
  CHECK(r.rows.size() == 3);
  for (const auto& row : r.rows) CHECK(row.lhs_scaled == doctest::Approx(row.rhs_scaled));
  CHECK(std::abs(r.rows.back().lhs_scaled - 1.0 / 24) < std::abs(r.rows.front().lhs_scaled - 1.0 / 24));
  const IdentityLimitReport two = limit_of_identity_demo(0, {Rat(1), Rat(2)}, {Rat(20)}, mc);
  CHECK(two.lhs_limit == two.rhs_limit);
  CHECK(two.rows.size() == 1);
}
