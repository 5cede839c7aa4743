#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace uwbtoa {

/// Runs fn(i) for every i in [0, n). Work is split into contiguous chunks
/// across threads; each index writes only its own slot in caller-owned
/// storage, so results are independent of the thread count and any later
/// reduction happens in index order.
template <typename F>
void parallel_for(std::size_t n, F&& fn, unsigned n_threads = 0) {
  if (n == 0) return;
  unsigned hw = n_threads ? n_threads : std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (hw > n) hw = static_cast<unsigned>(n);
  if (hw == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(hw);
  const std::size_t chunk = (n + hw - 1) / hw;
  for (unsigned t = 0; t < hw; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace uwbtoa
