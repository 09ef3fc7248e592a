#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace roverplan {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static block partition of [0, n). Each worker owns a disjoint index range,
// so writes to per-index slots need no synchronization and results are
// independent of the thread count.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  int nt = resolve_threads(threads);
  if (n == 0) return;
  if (nt <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  nt = static_cast<int>(std::min<std::size_t>(nt, n));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nt);
  std::size_t chunk = (n + nt - 1) / nt;
  for (int w = 0; w < nt; ++w) {
    std::size_t lo = chunk * w;
    std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&, lo, hi, w] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace roverplan
