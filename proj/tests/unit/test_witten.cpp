#include "doctest.h"

#include "guekdv/errors.hpp"
#include "guekdv/witten/free_energy.hpp"
#include "guekdv/witten/npoint.hpp"

#include <algorithm>
#include <numeric>

using namespace guekdv;
using namespace guekdv::witten;

namespace {

void show(const ResidualReport& r) {
  for (const auto& f : r.failures) MESSAGE(r.name << " " << f.key << " " << f.value);
}

}  // namespace

TEST_CASE("n-point functions") {
  CHECK(q_polynomial(1, 1) == HomogPoly::monomial(Rat(1, 24), {1}));
  CHECK(q_polynomial(0, 3) == HomogPoly::constant(3, Rat(1)));
  const HomogPoly q12 = q_polynomial(1, 2);
  CHECK(q12.coefficient({2, 0}) == Rat(1, 24));
  CHECK(q12.coefficient({1, 1}) == Rat(1, 24));
  CHECK(q12.coefficient({0, 2}) == Rat(1, 24));
  CHECK(q_polynomial(2, 1).coefficient({4}) == Rat(1, 1152));
  CHECK(q_polynomial(0, 4).coefficient({1, 0, 0, 0}) == Rat(1));
  CHECK_THROWS_AS((void)q_polynomial(4, 1), BoundExceeded);
  CHECK_THROWS_AS((void)q_polynomial(0, 2), Error);
}

TEST_CASE("n-point functions are symmetric and positive") {
  for (int g = 0; g <= 3; ++g) {
    for (int n = 1; n <= 4; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const HomogPoly& q = q_polynomial(g, n);
      CHECK(q.degree() == 3 * g - 3 + n);
      CHECK(q.all_coefficients_positive());
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        CHECK(q.permuted(perm) == q);
      } while (std::next_permutation(perm.begin(), perm.end()));
      // Every exponent allowed by the dimension appears.
      for (const auto& d : dimension_keys(g, n)) CHECK(q.coefficient(d).sign() > 0);
    }
  }
}

TEST_CASE("intersection numbers") {
  CHECK(intersection_number(0, {0, 0, 0}) == Rat(1));
  CHECK(intersection_number(1, {1}) == Rat(1, 24));
  CHECK(intersection_number(0, {1, 0, 0, 0}) == Rat(1));
  CHECK(intersection_number(2, {4}) == Rat(1, 1152));
  CHECK(intersection_number(3, {7}) == Rat(1, 82944));
  CHECK(intersection_number(1, {1, 1}) == Rat(1, 24));
  CHECK(intersection_number(2, {2, 3}) == Rat(29, 5760));
  CHECK(intersection_number(0, {0, 0}) == Rat(0));
  CHECK(intersection_number(1, {2}) == Rat(0));
  // Reductions reach beyond the n-point budget.
  CHECK(intersection_number(1, {0, 0, 0, 0, 0, 0, 7}) == Rat(1, 24));
  for (int g = 0; g <= 3; ++g) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& d : dimension_keys(g, n)) CHECK(intersection_number(g, d) == correlator_from_q(g, d));
    }
  }
}

TEST_CASE("string, dilaton and the two recursions") {
  const ResidualReport sd = verify_string_dilaton();
  show(sd);
  CHECK(sd.ok());
  CHECK(sd.checked > 30);
  CHECK(verify_stringQ(1, 1, 1).ok());
  CHECK(verify_stringQ(0, 3, 1).ok());
  CHECK(verify_stringQ(2, 2, 0).ok());
  CHECK(verify_stringQ(0, 1, 3).ok());
  CHECK(verify_stringQ(1, 2, 2).ok());
  for (int g = 0; g <= 3; ++g) {
    for (int n = 1; n <= 4; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const ResidualReport lx = lx_crosscheck(g, n);
      CHECK_MESSAGE(lx.ok(), g, " ", n);
      // Summing over ordered pairs double counts the splittings.
      if (n >= 2) CHECK(lx.notes.at("ordered_pairs.residual") != "0");
    }
  }
  const ResidualReport e = verify_kdv_relation(2, 3);
  show(e);
  CHECK(e.ok());
  CHECK(e.checked > 10);
}

TEST_CASE("Witten free energy") {
  const TSeries F = witten_free_energy(6, 2, 4);
  CHECK(F.coefficient({0, 0, 0}) == Rat(1, 6));
  CHECK(F.coefficient({1}) == Rat(1, 24));
  CHECK(F.coefficient({0, 2}) == Rat(1, 24));
  CHECK(F.coefficient({1, 1}) == Rat(1, 48));
  CHECK(F.coefficient({4}) == Rat(1, 1152));
  CHECK(F.genus_part(1).coefficient({0, 0, 0}).is_zero());
  const ResidualReport b = verify_bilinear(9, 2, 3);
  show(b);
  CHECK(b.ok());
  CHECK(b.checked > 30);
}
