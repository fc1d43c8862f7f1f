#include "doctest.h"

#include "guekdv/combinatorics.hpp"
#include "guekdv/eps_series.hpp"
#include "guekdv/errors.hpp"
#include "guekdv/homog_poly.hpp"
#include "guekdv/rat.hpp"

#include <random>

using namespace guekdv;

TEST_CASE("rat arithmetic and parsing") {
  CHECK(Rat(6, -4).str() == "-3/2");
  CHECK(Rat::parse("10/4") == Rat(5, 2));
  CHECK(Rat::parse("-7").str() == "-7");
  CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
  CHECK_THROWS(Rat(1) / Rat(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int t = 0; t < 100; ++t) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    Rat r(a, b);
    CHECK((r + (-r)).is_zero());
    CHECK(Rat(a, b) * Rat(b, a) == Rat(1));
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rat(1));
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(2) == Rat(1, 6));
  CHECK(bernoulli(3) == Rat(0));
  CHECK(bernoulli(4) == Rat(-1, 30));
  CHECK(bernoulli(10) == Rat(5, 66));
  CHECK(bernoulli(12) == Rat(-691, 2730));
}

TEST_CASE("generalized binomials") {
  CHECK(gen_binom(5, 2) == Rat(10));
  CHECK(gen_binom(-1, 2) == Rat(1));
  CHECK(gen_binom(2, 3) == Rat(0));
  for (long p = -20; p <= 20; ++p) {
    for (unsigned k = 0; k <= 10; ++k) {
      Rat falling(1);
      for (unsigned t = 0; t < k; ++t) falling *= Rat(p - static_cast<long>(t));
      CHECK(gen_binom(p, k) * Rat(factorial(k)) == falling);
    }
  }
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(-1) == 1);
}

TEST_CASE("exact polynomial division") {
  HomogPoly num(2, 4);
  num.add_term({4, 0}, 1);
  num.add_term({3, 1}, 3);
  num.add_term({2, 2}, 4);
  num.add_term({1, 3}, 3);
  num.add_term({0, 4}, 1);
  const int both[] = {0, 1};
  const HomogPoly den = HomogPoly::linear_sum(2, both).pow(2);
  HomogPoly expect(2, 2);
  expect.add_term({2, 0}, 1);
  expect.add_term({1, 1}, 1);
  expect.add_term({0, 2}, 1);
  CHECK(poly_exact_div(num, den) == expect);
  CHECK(poly_exact_div(num, HomogPoly::constant(2, 1)) == num);
  const int first[] = {0};
  CHECK_THROWS_AS(poly_exact_div(HomogPoly::linear_sum(2, both), HomogPoly::linear_sum(2, first)),
                  NonExactDivision);
}

TEST_CASE("taylor shift") {
  const EpsSeries x(XLogPoly::x_pow(1));
  CHECK(taylor_shift(x, 1, 5) == EpsSeries(XLogPoly::x_pow(1)) + EpsSeries(XLogPoly(1), 1));
  CHECK(taylor_shift(x, 1, 5).is_exact());

  const EpsSeries lg(XLogPoly::log_x());
  EpsSeries expect = lg;
  expect.add_term(1, XLogPoly::x_pow(-1));
  expect.add_term(2, XLogPoly::monomial(Rat(-1, 2), -2));
  expect.add_term(3, XLogPoly::monomial(Rat(1, 3), -3));
  const EpsSeries got = taylor_shift(lg, 1, 3);
  CHECK(got.prec() == 3);
  CHECK(got == expect.truncated(3));

  // (Lambda - 1)(1 - Lambda^{-1}) f has eps^2 coefficient f''.
  const EpsSeries f(XLogPoly::monomial(Rat(1, 2), 2, 1) - XLogPoly::monomial(Rat(3, 4), 2));
  const EpsSeries d2 = apply_operator(second_difference(), f, 6);
  CHECK(d2.coefficient(2) == XLogPoly::log_x());
}

TEST_CASE("shift round trip on random inputs") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-9, 9), e(-4, 4), l(0, 2);
  for (int t = 0; t < 100; ++t) {
    XLogPoly p;
    for (int k = 0; k < 3; ++k) p.add_term({e(rng), l(rng), 0}, Rat(c(rng)));
    const EpsSeries f(p);
    const int order = 6;
    const EpsSeries back = taylor_shift(taylor_shift(f, 1, order), -1, order);
    CHECK(back.truncated(order) == f.truncated(order));
  }
}

TEST_CASE("tanh half operator") {
  const EpsDiffOperator op = tanh_half();
  CHECK(op.coefficient(1) == Rat(1, 2));
  CHECK(op.coefficient(3) == Rat(-1, 24));
  const EpsSeries x(XLogPoly::x_pow(1));
  CHECK(tanh_half_operator(x, 10) == EpsSeries(XLogPoly(Rat(1, 2)), 2));
}

TEST_CASE("tanh half matches geometric inversion of (Lambda+1)/2") {
  // eps (Lambda-1) (1 + (Lambda-1)/2)^{-1} / 2 expanded as a geometric series.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-5, 5), e(-3, 5), l(0, 1);
  const int order = 10;
  for (int t = 0; t < 20; ++t) {
    XLogPoly p;
    for (int k = 0; k < 3; ++k) p.add_term({e(rng), l(rng), 0}, Rat(c(rng)));
    const EpsSeries f(p);
    const EpsSeries d = apply_operator(forward_difference(), f, order);
    EpsSeries term = d;
    EpsSeries sum = d;
    for (int k = 1; k <= order; ++k) {
      term = apply_operator(forward_difference(), term, order) * Rat(-1, 2);
      sum += term;
    }
    const EpsSeries geometric = (sum * Rat(1, 2)).times_eps_pow(1).truncated(order);
    CHECK(tanh_half_operator(f, order).truncated(order) == geometric.truncated(order));
  }
}
