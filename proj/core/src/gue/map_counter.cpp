#include "guekdv/gue/map_counter.hpp"

#include "guekdv/errors.hpp"
#include "guekdv/gue/wick.hpp"
#include "guekdv/toda/gue_resolvent.hpp"

namespace guekdv::gue {

std::string producer_name(Producer p) { return p == Producer::Oracle ? "oracle" : "resolvent"; }

Producer parse_producer(const std::string& s) {
  if (s == "oracle") return Producer::Oracle;
  if (s == "resolvent") return Producer::Resolvent;
  throw ParseError("unknown producer '" + s + "'");
}

bool MapCounter::lookup(const Key& k, BigInt& out) const {
  std::lock_guard lock(mu_);
  const auto it = store_.find(k);
  if (it == store_.end()) return false;
  out = it->second.value;
  return true;
}

void MapCounter::insert(int g, const IndexMultiset& i, const BigInt& value, Producer producer) {
  std::lock_guard lock(mu_);
  auto [it, inserted] = store_.try_emplace(Key{g, i}, Entry{value, producer});
  if (!inserted && it->second.value != value) {
    throw CacheConflict("map count " + std::to_string(g) + ";" + i.key() + ": " + it->second.value.get_str() + " (" +
                        producer_name(it->second.producer) + ") vs " + value.get_str() + " (" +
                        producer_name(producer) + ")");
  }
}

void MapCounter::prefetch_onepoint(int i_max, int g_max) {
  for (const auto& [key, v] : toda::onepoint_correlators_via_resolvent(i_max, g_max)) {
    insert(key.first, IndexMultiset{key.second}, v, Producer::Resolvent);
  }
}

BigInt MapCounter::count(int g, const IndexMultiset& i) {
  if (g < 0 || i.empty() || i.total() % 2 != 0 || g > i.max_genus()) return 0;
  BigInt v;
  if (lookup({g, i}, v)) return v;

  Producer producer = Producer::Oracle;
  if (g == 0 && i.size() == 1) {
    v = catalan_onepoint(i[0] / 2);
  } else if (g == 0 && i.size() == 2) {
    v = (i[0] % 2 == 0) ? genus0_twopoint(i[0] / 2, i[1] / 2, Parity::Even)
                        : genus0_twopoint((i[0] + 1) / 2, (i[1] + 1) / 2, Parity::Odd);
  } else if (i.total() <= std::min(opts_.enumerate_up_to, kWickHardCap)) {
    v = map_count(g, i, WickOptions{kWickHardCap});
  } else if (opts_.use_resolvent && i.size() == 1) {
    const auto table = toda::onepoint_correlators_via_resolvent(i[0], g);
    v = table.at({g, i[0]});
    producer = Producer::Resolvent;
  } else if (opts_.use_resolvent && i.size() == 2) {
    const auto table = toda::twopoint_correlators_via_resolvent(i[0], i[1], g);
    v = table.at({g, i[0], i[1]});
    producer = Producer::Resolvent;
  } else if (opts_.use_recursion) {
    v = map_count_recursive(g, i);
  } else {
    throw BoundExceeded("no backend can supply Map_" + std::to_string(g) + "(" + i.key() + ")");
  }
  insert(g, i, v, producer);
  return v;
}

std::map<MapCounter::Key, MapCounter::Entry> MapCounter::entries() const {
  std::lock_guard lock(mu_);
  return store_;
}

}  // namespace guekdv::gue
