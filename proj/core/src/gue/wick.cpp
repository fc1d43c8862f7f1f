#include "guekdv/gue/wick.hpp"

#include "guekdv/combinatorics.hpp"
#include "guekdv/errors.hpp"
#include "guekdv/parallel.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>

namespace guekdv::gue {

namespace {

class MatchingEnumerator {
 public:
  explicit MatchingEnumerator(const IndexMultiset& i) : total_(i.total()) {
    int offset = 0;
    for (const int valence : i.values()) {
      for (int k = 0; k < valence; ++k) gamma_[offset + k] = offset + (k + 1) % valence;
      offset += valence;
    }
  }

  /// Cycle histogram over matchings whose first pair is (0, partner).
  std::vector<std::uint64_t> count_with_first_pair(int partner) {
    counts_.assign(static_cast<std::size_t>(total_) + 1, 0);
    const std::uint32_t all = (total_ == 32) ? ~0U : ((1U << total_) - 1U);
    mate_[0] = partner;
    mate_[partner] = 0;
    recurse(all & ~1U & ~(1U << partner));
    return counts_;
  }

 private:
  void recurse(std::uint32_t unmatched) {
    if (unmatched == 0) {
      ++counts_[cycles()];
      return;
    }
    const int h = std::countr_zero(unmatched);
    const std::uint32_t rest = unmatched & (unmatched - 1);
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      const int p = std::countr_zero(r);
      mate_[h] = p;
      mate_[p] = h;
      recurse(rest & ~(1U << p));
    }
  }

  [[nodiscard]] int cycles() const {
    std::uint32_t visited = 0;
    int c = 0;
    for (int h = 0; h < total_; ++h) {
      if ((visited >> h) & 1U) continue;
      ++c;
      for (int k = h; ((visited >> k) & 1U) == 0; k = gamma_[mate_[k]]) visited |= 1U << k;
    }
    return c;
  }

  int total_;
  std::array<int, kWickHardCap> gamma_{};
  std::array<int, kWickHardCap> mate_{};
  std::vector<std::uint64_t> counts_;
};

std::mutex g_full_mu;
std::map<IndexMultiset, CorrPolyN>& full_cache() {
  static std::map<IndexMultiset, CorrPolyN> cache;
  return cache;
}

CorrPolyN enumerate(const IndexMultiset& i) {
  const int total = i.total();
  MatchingEnumerator proto(i);
  const auto parts = parallel_map<std::vector<std::uint64_t>>(
      static_cast<std::size_t>(total - 1), [&](std::size_t k) {
        MatchingEnumerator e = proto;
        return e.count_with_first_pair(static_cast<int>(k) + 1);
      });
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(total) + 1, 0);
  for (const auto& part : parts) {
    for (std::size_t c = 0; c < part.size(); ++c) hist[c] += part[c];
  }
  CorrPolyN out;
  for (std::size_t c = 0; c < hist.size(); ++c) {
    if (hist[c] != 0) out.add_term(static_cast<int>(c), Rat(BigInt(static_cast<unsigned long>(hist[c]))));
  }
  return out;
}

void set_partitions(int n, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> blocks;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= 1U << k;
      rec(k + 1);
      blocks[b] &= ~(1U << k);
    }
    blocks.push_back(1U << k);
    rec(k + 1);
    blocks.pop_back();
  };
  rec(0);
}

// Dense polynomial in N used by the contraction recursion.
using Dense = std::vector<BigInt>;

void dense_add(Dense& a, const Dense& b, unsigned long scale = 1) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (scale == 1) {
      a[k] += b[k];
    } else {
      a[k] += b[k] * scale;
    }
  }
}

void dense_add_product(Dense& acc, const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1);
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] == 0) continue;
    for (std::size_t q = 0; q < b.size(); ++q) {
      if (b[q] != 0) acc[p + q] += a[p] * b[q];
    }
  }
}

class ContractionSolver {
 public:
  const Dense& get(std::vector<int> ms) {
    std::sort(ms.begin(), ms.end());
    if (auto it = memo_.find(ms); it != memo_.end()) return it->second;
    Dense r = compute(ms);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return memo_.emplace(std::move(ms), std::move(r)).first->second;
  }

 private:
  Dense compute(const std::vector<int>& ms) {
    if (ms.empty()) return {};
    if (ms.front() == 0) {
      if (ms.size() == 1) return Dense{0, 1};
      return {};
    }
    int sum = 0;
    for (int v : ms) sum += v;
    if (sum % 2 != 0) return {};

    const int top = ms.back();
    const std::vector<int> rest(ms.begin(), ms.end() - 1);
    const std::size_t m = rest.size();
    Dense acc;
    for (int k = 0; k <= top - 2; ++k) {
      const int l = top - 2 - k;
      std::vector<int> both = rest;
      both.push_back(k);
      both.push_back(l);
      dense_add(acc, get(both));
      for (unsigned mask = 0; mask < (1U << m); ++mask) {
        std::vector<int> a{k};
        std::vector<int> b{l};
        for (std::size_t t = 0; t < m; ++t) ((mask >> t) & 1U ? a : b).push_back(rest[t]);
        const Dense pa = get(a);
        if (pa.empty()) continue;
        dense_add_product(acc, pa, get(b));
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<int> merged;
      for (std::size_t t = 0; t < m; ++t) {
        if (t != a) merged.push_back(rest[t]);
      }
      merged.push_back(top + rest[a] - 2);
      dense_add(acc, get(merged), static_cast<unsigned long>(rest[a]));
    }
    return acc;
  }

  std::map<std::vector<int>, Dense> memo_;

 public:
  void clear() { memo_.clear(); }
};

std::mutex g_contraction_mu;
ContractionSolver& contraction_solver() {
  static ContractionSolver solver;
  return solver;
}

CorrPolyN from_dense(const Dense& d) {
  CorrPolyN p;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] != 0) p.add_term(static_cast<int>(k), Rat(d[k]));
  }
  return p;
}

BigInt to_integer(const Rat& r) {
  if (!r.is_integer()) throw Error("map count is not an integer: " + r.str());
  return r.num();
}

}  // namespace

CorrPolyN full_correlator(const IndexMultiset& i, const WickOptions& opts) {
  if (i.total() % 2 != 0) return {};
  const int bound = std::min(opts.bound, kWickHardCap);
  if (i.total() > bound) {
    throw BoundExceeded("Wick enumeration: |i| = " + std::to_string(i.total()) +
                        " exceeds bound " + std::to_string(bound));
  }
  if (i.empty()) return CorrPolyN::monomial(Rat(1), 0);
  {
    std::lock_guard lock(g_full_mu);
    if (auto it = full_cache().find(i); it != full_cache().end()) return it->second;
  }
  CorrPolyN r = enumerate(i);
  std::lock_guard lock(g_full_mu);
  full_cache().emplace(i, r);
  return r;
}

CorrPolyN connected_correlator(const IndexMultiset& i, const WickOptions& opts) {
  if (i.empty() || i.total() % 2 != 0) return {};
  if (i.size() == 1) return full_correlator(i, opts);
  CorrPolyN out;
  std::map<unsigned, CorrPolyN> block_cache;
  auto block = [&](unsigned mask) -> const CorrPolyN& {
    auto it = block_cache.find(mask);
    if (it == block_cache.end()) it = block_cache.emplace(mask, full_correlator(i.subset(mask), opts)).first;
    return it->second;
  };
  set_partitions(i.size(), [&](const std::vector<unsigned>& blocks) {
    CorrPolyN term = CorrPolyN::monomial(Rat(1), 0);
    for (const unsigned b : blocks) {
      const CorrPolyN& f = block(b);
      if (f.is_zero()) return;
      term = term * f;
    }
    const std::size_t k = blocks.size();
    Rat mobius(factorial(static_cast<unsigned>(k - 1)));
    if (k % 2 == 0) mobius = -mobius;
    out += term * mobius;
  });
  return out;
}

BigInt map_count(int g, const IndexMultiset& i, const WickOptions& opts) {
  if (g < 0 || i.empty() || i.total() % 2 != 0 || g > i.max_genus()) return 0;
  return to_integer(connected_correlator(i, opts).coefficient(i.n_exponent(g)));
}

CorrPolyN connected_correlator_recursive(const IndexMultiset& i) {
  if (i.empty()) return {};
  std::lock_guard lock(g_contraction_mu);
  return from_dense(contraction_solver().get(i.values()));
}

BigInt map_count_recursive(int g, const IndexMultiset& i) {
  if (g < 0 || i.empty() || i.total() % 2 != 0 || g > i.max_genus()) return 0;
  std::lock_guard lock(g_contraction_mu);
  const Dense& d = contraction_solver().get(i.values());
  const int e = i.n_exponent(g);
  return (e >= 0 && static_cast<std::size_t>(e) < d.size()) ? d[static_cast<std::size_t>(e)] : BigInt(0);
}

BigInt catalan_onepoint(int j) {
  if (j < 1) throw Error("catalan_onepoint: j must be >= 1");
  const auto ju = static_cast<unsigned long>(j);
  return binomial(2 * ju, ju) / (ju + 1);
}

BigInt genus0_twopoint(int j1, int j2, Parity parity) {
  if (j1 < 1 || j2 < 1) throw Error("genus0_twopoint: indices must be >= 1");
  const auto a = static_cast<unsigned long>(j1);
  const auto b = static_cast<unsigned long>(j2);
  BigInt num;
  BigInt den;
  if (parity == Parity::Even) {
    num = binomial(2 * a, a) * binomial(2 * b, b) * BigInt(a * b);
    den = a + b;
  } else {
    num = binomial(2 * a - 1, a) * binomial(2 * b - 1, b) * BigInt(a * b);
    den = a + b - 1;
  }
  if (num % den != 0) throw NonExactDivision("genus0_twopoint: non-integer value");
  return num / den;
}

void clear_correlator_caches() {
  {
    std::lock_guard lock(g_full_mu);
    full_cache().clear();
  }
  std::lock_guard lock(g_contraction_mu);
  contraction_solver().clear();
}

BigInt check_dilation(int g, const IndexMultiset& i, const WickOptions& opts) {
  BigInt r = map_count(g, i.with(2), opts) - BigInt(i.total()) * map_count(g, i, opts);
  if (g == 0 && i.empty()) r -= 1;
  return r;
}

}  // namespace guekdv::gue
