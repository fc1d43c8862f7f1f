#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace guekdv {

/// Process-wide worker count used by the parallel kernels (default 1).
void set_worker_count(unsigned n);
unsigned worker_count();

/// Runs task(k) for k in [0, n) on up to worker_count() threads. Each task
/// writes only its own slot, so callers reduce results in index order and
/// stay deterministic for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t k) { out[k] = f(k); });
  return out;
}

}  // namespace guekdv
