#include "guekdv/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace guekdv {

Rat bernoulli(unsigned m) {
  // B_0..B_n from sum_{k<=n} C(n+1,k) B_k = 0, grown on demand.
  static std::mutex mu;
  static std::vector<Rat> table{Rat(1)};
  std::lock_guard lock(mu);
  while (table.size() <= m) {
    const unsigned n = static_cast<unsigned>(table.size());
    Rat acc;
    for (unsigned k = 0; k < n; ++k) acc += Rat(binomial(n + 1, k)) * table[k];
    table.push_back(-acc / Rat(static_cast<long>(n) + 1));
  }
  return table[m];
}

Rat gen_binom(long p, unsigned k) {
  BigInt num = 1;
  for (unsigned j = 0; j < k; ++j) num *= BigInt(p - static_cast<long>(j));
  return Rat(num, factorial(k));
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt double_factorial(long n) {
  if (n <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace guekdv
