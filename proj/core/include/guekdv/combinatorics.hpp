#pragma once

#include "guekdv/rat.hpp"

namespace guekdv {

/// Bernoulli number B_m with B_1 = -1/2.
Rat bernoulli(unsigned m);

/// Generalized binomial p(p-1)...(p-k+1)/k!; p may be negative.
Rat gen_binom(long p, unsigned k);

BigInt factorial(unsigned n);

/// n!! with (-1)!! = 0!! = 1.
BigInt double_factorial(long n);

/// Ordinary binomial C(n, k) for n >= 0; zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace guekdv
