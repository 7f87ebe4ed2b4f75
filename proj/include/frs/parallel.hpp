#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace frs {

/// Worker count for sweeps: FRS_THREADS when set to a positive integer,
/// otherwise the hardware concurrency.
std::size_t sweep_threads();

/// Calls `body(i)` for every i in [0, n), striped across sweep_threads()
/// workers. The first exception thrown by any call is rethrown after all
/// workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Result slots filled in parallel and returned in index order.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, F f) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace frs
