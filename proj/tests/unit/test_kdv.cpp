#include "doctest.h"

#include "guekdv/errors.hpp"
#include "guekdv/kdv/witten_kdv.hpp"

#include <random>

using namespace guekdv;
using namespace guekdv::kdv;

namespace {

DiffPoly u(int k) { return DiffPoly::jet(k); }

PsiDO random_pdo(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> jet(0, 2);
  PsiDO p(depth);
  for (int k = 1; k >= -3; --k) {
    DiffPoly a(Rat(coef(rng)));
    a += u(jet(rng)) * Rat(coef(rng));
    p.add_term(k, a);
  }
  return p;
}

}  // namespace

TEST_CASE("pseudodifferential composition") {
  const PsiDO du = pdo_compose(PsiDO::d(1), PsiDO::multiplication(u(0)));
  CHECK(du.coefficient(1) == u(0));
  CHECK(du.coefficient(0) == u(1));
  const PsiDO inv = pdo_compose(PsiDO::d(-1).truncated(6), PsiDO::multiplication(u(0)));
  CHECK(inv.coefficient(-1) == u(0));
  CHECK(inv.coefficient(-2) == -u(1));
  CHECK(inv.coefficient(-3) == u(2));
  CHECK(inv.coefficient(-4) == -u(3));
  const PsiDO one = pdo_compose(PsiDO::d(2), PsiDO::d(-2).truncated(5));
  CHECK(one.coefficient(0) == DiffPoly(Rat(1)));
  CHECK(one.terms().size() == 1);
  CHECK_THROWS_AS((void)pdo_compose(PsiDO::d(-1), PsiDO::multiplication(u(0))), DepthExceeded);
  CHECK_THROWS_AS((void)inv.coefficient(-7), DepthExceeded);
}

TEST_CASE("composition is associative modulo the depth") {
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    const PsiDO a = random_pdo(rng, 6);
    const PsiDO b = random_pdo(rng, 6);
    const PsiDO c = random_pdo(rng, 6);
    const PsiDO l = pdo_compose(pdo_compose(a, b), c);
    const PsiDO r = pdo_compose(a, pdo_compose(b, c));
    const int depth = std::min(l.depth(), r.depth());
    CHECK(depth >= 3);
    CHECK((l.truncated(depth) - r.truncated(depth)).is_zero());
  }
}

TEST_CASE("square root of the Lax operator") {
  const PsiDO S = lax_sqrt(8);
  CHECK(S.coefficient(0).is_zero());
  CHECK(S.coefficient(-1) == u(0));
  CHECK(S.coefficient(-2) == -u(1) * Rat(1, 2));
  const PsiDO L = lax_operator();
  CHECK((pdo_compose(S, L) - pdo_compose(L, S)).is_zero());
}

TEST_CASE("KdV flows") {
  const DiffPoly k1 = kdv_flow_rhs(1);
  CHECK(k1 == u(0) * u(1) + u(3) * Rat(1, 12));
  CHECK(kdv_flow_rhs(1, 12) == k1);
  for (int d = 1; d <= 3; ++d) {
    const DiffPoly k = kdv_flow_rhs(d);
    CHECK(k.weight() == 2 * d + 3);
    MESSAGE(d << ": " << k.str());
  }
  CHECK_THROWS_AS((void)kdv_flow_rhs(4), BoundExceeded);
}

TEST_CASE("Witten free energy solves KdV") {
  const ResidualReport r1 = verify_witten_kdv(1, 6, 2);
  CHECK(r1.ok());
  CHECK(r1.checked > 50);
  const ResidualReport r2 = verify_witten_kdv(2, 5, 2);
  CHECK(r2.ok());
  const ResidualReport r3 = verify_witten_kdv(3, 3, 2, 3);
  CHECK(r3.ok());
  for (const auto* r : {&r1, &r2, &r3}) {
    for (const auto& f : r->failures) MESSAGE(r->name << " " << f.key << " " << f.value);
  }
}
