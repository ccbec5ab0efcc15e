#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace abel {

/// Worker count from ABEL_LAB_THREADS (0 or unset = hardware concurrency).
unsigned worker_count();

/// Runs task(i) for i in [0, n) on up to worker_count() threads. Each index
/// runs exactly once; the first exception (lowest index) is rethrown after
/// all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

/// parallel_for collecting results by index, so the output order never
/// depends on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace abel
