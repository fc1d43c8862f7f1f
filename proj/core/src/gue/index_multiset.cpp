#include "guekdv/gue/index_multiset.hpp"

#include "guekdv/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace guekdv::gue {

IndexMultiset::IndexMultiset(std::vector<int> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  if (!values_.empty() && values_.front() < 1) throw Error("IndexMultiset: entries must be >= 1");
  total_ = std::accumulate(values_.begin(), values_.end(), 0);
}

IndexMultiset IndexMultiset::parse(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || v < 1) {
      throw ParseError("invalid index list '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return IndexMultiset(std::move(out));
}

IndexMultiset IndexMultiset::with(int value) const {
  std::vector<int> v = values_;
  v.push_back(value);
  return IndexMultiset(std::move(v));
}

IndexMultiset IndexMultiset::subset(unsigned mask) const {
  std::vector<int> v;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if ((mask >> k) & 1U) v.push_back(values_[k]);
  }
  return IndexMultiset(std::move(v));
}

int IndexMultiset::max_genus() const {
  // floor(|i|/4 + 1/2 - n/2) = floor((|i| + 2 - 2n)/4)
  const int num = total_ + 2 - 2 * size();
  return num >= 0 ? num / 4 : -((-num + 3) / 4);
}

std::string IndexMultiset::key() const {
  std::string s;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k != 0) s += ',';
    s += std::to_string(values_[k]);
  }
  return s;
}

std::vector<IndexMultiset> enumerate_multisets(int max_size, int max_index, int max_total) {
  std::vector<IndexMultiset> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int lo, int total) {
    if (!cur.empty()) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_size) return;
    for (int v = lo; v <= max_index && total + v <= max_total; ++v) {
      cur.push_back(v);
      rec(v, total + v);
      cur.pop_back();
    }
  };
  rec(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace guekdv::gue
