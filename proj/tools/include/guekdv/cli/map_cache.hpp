#pragma once

#include "guekdv/gue/map_counter.hpp"

#include <map>
#include <string>
#include <utility>

namespace guekdv::cli {

/// Persistent map counts.
///
/// Document: {"version": 1, "producer": "oracle"|"resolvent",
/// "entries": {"g;i1,i2,...": "decimal"}}. When entries come from both
/// producers, "producer" is the more common one and "producers" lists the
/// keys made by the other.
class MapCache {
 public:
  static constexpr int kVersion = 1;

  struct Entry {
    BigInt value;
    gue::Producer producer;
    std::string source;  ///< file or run the value was read from
  };
  using Key = gue::MapCounter::Key;

  /// "g;i1,...,in" with sorted indices.
  static std::string key_string(const Key& k);
  static Key parse_key(const std::string& s);

  static MapCache parse(const std::string& text, const std::string& source);
  static MapCache load(const std::string& path);
  /// A missing file gives an empty cache.
  static MapCache load_or_empty(const std::string& path);

  /// Adds one value; a different stored value raises CacheConflict naming both sources.
  void insert(const Key& k, const BigInt& value, gue::Producer producer, const std::string& source);
  void merge(const MapCache& other);

  /// Seeds a counter with every entry.
  void seed(gue::MapCounter& counter) const;
  /// Adds every value the counter holds.
  void absorb(const gue::MapCounter& counter, const std::string& source);

  [[nodiscard]] const std::map<Key, Entry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }

  [[nodiscard]] std::string dump() const;
  /// Writes through a temporary file and rename.
  void save(const std::string& path) const;

 private:
  std::map<Key, Entry> entries_;
};

}  // namespace guekdv::cli
