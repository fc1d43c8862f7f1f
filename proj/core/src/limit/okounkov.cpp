#include "guekdv/limit/okounkov.hpp"

#include "guekdv/errors.hpp"
#include "guekdv/witten/npoint.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace guekdv::limit {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kFloatDigits>>;

Real to_real(const BigInt& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real to_real(const Rat& q) { return to_real(q.num()) / to_real(q.den()); }

Real lfact(long n) { return boost::multiprecision::lgamma(Real(n + 1)); }

/// log C(a, b).
Real lbinom(long a, long b) { return lfact(a) - lfact(b) - lfact(a - b); }

BigInt floor_rat(const Rat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
  return r;
}

/// log Map_0 from the closed forms; the caller has checked g = 0, n <= 2.
Real log_genus0(const std::vector<int>& i) {
  if (i.size() == 1) {
    const long j = i[0] / 2;
    return lbinom(2 * j, j) - boost::multiprecision::log(Real(j + 1));
  }
  if (i[0] % 2 == 0) {
    const long j1 = i[0] / 2;
    const long j2 = i[1] / 2;
    return lbinom(2 * j1, j1) + lbinom(2 * j2, j2) + boost::multiprecision::log(Real(j1 * j2)) -
           boost::multiprecision::log(Real(j1 + j2));
  }
  const long j1 = (i[0] + 1) / 2;
  const long j2 = (i[1] + 1) / 2;
  return lbinom(2 * j1 - 1, j1) + lbinom(2 * j2 - 1, j2) + boost::multiprecision::log(Real(j1 * j2)) -
         boost::multiprecision::log(Real(j1 + j2 - 1));
}

}  // namespace

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::vector<int> round_indices(const std::vector<Rat>& x, const Rat& kappa, gue::Parity parity) {
  if (parity == gue::Parity::Odd && x.size() % 2 != 0) {
    throw Error("round_indices: odd indices need an even number of entries");
  }
  std::vector<int> out;
  for (const Rat& xa : x) {
    if (xa.sign() <= 0) throw Error("round_indices: x entries must be positive");
    const Rat half = parity == gue::Parity::Even ? kappa * xa / Rat(2) : (kappa * xa + Rat(1)) / Rat(2);
    const BigInt r = floor_rat(half + Rat(1, 2));
    if (!r.fits_sint_p()) throw BoundExceeded("round_indices: index too large");
    const int i = static_cast<int>(2 * r.get_si()) - (parity == gue::Parity::Even ? 0 : 1);
    if (i < 1) throw Error("round_indices: kappa too small for x = " + xa.str());
    out.push_back(i);
  }
  return out;
}

Rat witten_q_value(int g, const std::vector<Rat>& x) {
  const int n = static_cast<int>(x.size());
  if (n == 0) return Rat(0);
  if (2 * g - 2 + n <= 0) {
    if (g != 0) return Rat(0);
    if (n == 1) return Rat(1) / (x[0] * x[0]);
    return Rat(1) / (x[0] + x[1]);
  }
  witten::WittenOptions opt;
  opt.g_max = std::max(opt.g_max, g);
  opt.n_max = std::max(opt.n_max, n);
  return witten::q_polynomial(g, n, opt).evaluate(x);
}

ScaledValue okounkov_scaled_value(int g, const std::vector<Rat>& x, const Rat& kappa, gue::MapCounter& counter,
                                  gue::Parity parity) {
  if (x.empty()) throw Error("okounkov_scaled_value: empty x");
  ScaledValue out;
  out.indices = round_indices(x, kappa, parity);
  std::vector<int> sorted = out.indices;
  std::sort(sorted.begin(), sorted.end());
  const int n = static_cast<int>(x.size());
  const long total = std::accumulate(sorted.begin(), sorted.end(), 0L);
  Real log_map;
  if (g == 0 && n <= 2) {
    log_map = log_genus0(sorted);
  } else {
    const BigInt m = counter.count(g, gue::IndexMultiset(sorted));
    if (m == 0) {
      out.digits = "0";
      return out;
    }
    log_map = boost::multiprecision::log(to_real(m));
  }
  const Real ln2 = boost::multiprecision::log(Real(2));
  const Real lnpi = boost::multiprecision::log(boost::math::constants::pi<Real>());
  Real lx = 0;
  for (const Rat& xa : x) lx += boost::multiprecision::log(to_real(xa));
  const Real a = Real(2 * g - 3) + Real(3 * n) / 2;
  const Real lv = a * ln2 + Real(n) / 2 * lnpi - lx / 2 + log_map - Real(total) * ln2 -
                  (Real(3 * g - 3) + Real(3 * n) / 2) * boost::multiprecision::log(to_real(kappa));
  const Real v = boost::multiprecision::exp(lv);
  out.value = v.convert_to<double>();
  out.digits = v.str(30);
  return out;
}

std::string ConvergenceReport::csv(int digits) const {
  std::string s = "kappa,indices,scaled_value,limit,rel_error\n";
  for (const auto& r : rows) {
    std::string idx;
    for (std::size_t a = 0; a < r.indices.size(); ++a) idx += (a ? ";" : "") + std::to_string(r.indices[a]);
    s += r.kappa.str() + "," + idx + "," + format_double(r.scaled_value, digits) + "," +
         format_double(r.limit, digits) + "," + format_double(r.rel_error, digits) + "\n";
  }
  return s;
}

ConvergenceReport okounkov_convergence_report(int g, const std::vector<Rat>& x, const std::vector<Rat>& ladder,
                                              gue::MapCounter& counter, gue::Parity parity) {
  ConvergenceReport rep;
  rep.g = g;
  rep.x = x;
  rep.parity = parity;
  rep.limit = witten_q_value(g, x);
  if (x.size() == 1 && g >= 1 && !ladder.empty()) {
    int top = 0;
    for (const Rat& k : ladder) top = std::max(top, round_indices(x, k, parity)[0]);
    counter.prefetch_onepoint(top, g);
  }
  const Real lim = to_real(rep.limit);
  for (const Rat& k : ladder) {
    const ScaledValue sv = okounkov_scaled_value(g, x, k, counter, parity);
    ConvergenceRow row;
    row.kappa = k;
    row.indices = sv.indices;
    row.scaled_value = sv.value;
    row.limit = lim.convert_to<double>();
    const Real v(sv.digits);
    row.rel_error = rep.limit.is_zero() ? boost::multiprecision::abs(v).convert_to<double>()
                                        : boost::multiprecision::abs((v - lim) / lim).convert_to<double>();
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace guekdv::limit
