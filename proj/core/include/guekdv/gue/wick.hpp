#pragma once

#include "guekdv/gue/corr_poly.hpp"
#include "guekdv/gue/index_multiset.hpp"
#include "guekdv/rat.hpp"

namespace guekdv::gue {

/// Largest |i| the matching enumerator accepts.
inline constexpr int kWickHardCap = 20;

struct WickOptions {
  /// Maximum |i|; (|i|-1)!! matchings are enumerated.
  int bound = 16;
};

/// <tr M^{i_1} ... tr M^{i_n}> by the Wick rule: sum over perfect matchings
/// of the half-edges of N^{cycles(gamma o mu)}.
CorrPolyN full_correlator(const IndexMultiset& i, const WickOptions& opts = {});

/// Cumulant of full correlators over set partitions of the insertions.
CorrPolyN connected_correlator(const IndexMultiset& i, const WickOptions& opts = {});

/// Coefficient of N^{2-2g+|i|/2-n} in connected_correlator(i).
BigInt map_count(int g, const IndexMultiset& i, const WickOptions& opts = {});

/// Connected correlator from the recursion obtained by contracting the first
/// half-edge of the largest vertex. Memoized; no enumeration bound.
CorrPolyN connected_correlator_recursive(const IndexMultiset& i);
BigInt map_count_recursive(int g, const IndexMultiset& i);

/// Drops the memoized full and recursive correlators.
void clear_correlator_caches();

/// Catalan number C_j.
BigInt catalan_onepoint(int j);

enum class Parity { Even, Odd };

/// Genus-0 two-point count Map_0(2j1, 2j2) (even) or Map_0(2j1-1, 2j2-1) (odd).
BigInt genus0_twopoint(int j1, int j2, Parity parity);

/// Map_g(2, i) - |i| Map_g(i) - [g = 0, n = 0]; zero by the dilation identity.
BigInt check_dilation(int g, const IndexMultiset& i, const WickOptions& opts = {});

}  // namespace guekdv::gue
