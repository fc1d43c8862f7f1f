#pragma once

#include "guekdv/gue/index_multiset.hpp"
#include "guekdv/rat.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace guekdv::gue {

enum class Producer { Oracle, Resolvent };

std::string producer_name(Producer p);
Producer parse_producer(const std::string& s);

struct MapCounterOptions {
  /// Largest |i| answered by matching enumeration.
  int enumerate_up_to = 12;
  /// Use the resolvent for one- and two-point counts beyond enumeration.
  bool use_resolvent = true;
  /// Use the contraction recursion for everything else.
  bool use_recursion = true;
};

/// Map counts with backend dispatch and a merge-only store.
///
/// Order: vanishing rules, stored values, genus-0 closed forms, Wick
/// enumeration, resolvent (n <= 2), contraction recursion. Every computed
/// value is stored with the producer that made it.
class MapCounter {
 public:
  struct Entry {
    BigInt value;
    Producer producer;
  };
  using Key = std::pair<int, IndexMultiset>;

  MapCounter() = default;
  explicit MapCounter(MapCounterOptions opts) : opts_(opts) {}

  BigInt count(int g, const IndexMultiset& i);

  /// Inserts a value; an existing different value raises CacheConflict.
  void insert(int g, const IndexMultiset& i, const BigInt& value, Producer producer);
  /// Fills one-point counts Map_g(i), i <= i_max, g <= g_max from a single resolvent solve.
  void prefetch_onepoint(int i_max, int g_max);

  [[nodiscard]] std::map<Key, Entry> entries() const;
  [[nodiscard]] const MapCounterOptions& options() const { return opts_; }

 private:
  bool lookup(const Key& k, BigInt& out) const;

  MapCounterOptions opts_;
  mutable std::mutex mu_;
  std::map<Key, Entry> store_;
};

}  // namespace guekdv::gue
