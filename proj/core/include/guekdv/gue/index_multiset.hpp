#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace guekdv::gue {

/// Sorted multiset of positive trace powers (i_1 <= ... <= i_n).
class IndexMultiset {
 public:
  IndexMultiset() = default;
  IndexMultiset(std::initializer_list<int> values) : IndexMultiset(std::vector<int>(values)) {}
  explicit IndexMultiset(std::vector<int> values);

  /// Parses a comma-separated list such as "4,2".
  static IndexMultiset parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& values() const { return values_; }
  [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] bool empty() const { return values_.empty(); }
  [[nodiscard]] int total() const { return total_; }
  [[nodiscard]] int operator[](std::size_t k) const { return values_[k]; }

  [[nodiscard]] IndexMultiset with(int value) const;
  /// Sub-multiset picked by a bit mask over positions.
  [[nodiscard]] IndexMultiset subset(unsigned mask) const;
  /// Exponent of N carried by genus g: 2 - 2g + |i|/2 - n.
  [[nodiscard]] int n_exponent(int genus) const { return 2 - 2 * genus + total_ / 2 - size(); }
  /// Largest genus allowed by the genus expansion (may be negative).
  [[nodiscard]] int max_genus() const;

  [[nodiscard]] std::string key() const;

  friend bool operator==(const IndexMultiset& a, const IndexMultiset& b) { return a.values_ == b.values_; }
  friend auto operator<=>(const IndexMultiset& a, const IndexMultiset& b) { return a.values_ <=> b.values_; }

 private:
  std::vector<int> values_;
  int total_ = 0;
};

/// All multisets of size in [1, max_size] with entries in [1, max_index]
/// and total <= max_total, in lexicographic order.
std::vector<IndexMultiset> enumerate_multisets(int max_size, int max_index, int max_total);

}  // namespace guekdv::gue
