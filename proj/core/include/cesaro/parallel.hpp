#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cesaro {

/// Worker count: CESARO_THREADS if set and positive, else hardware concurrency.
std::size_t thread_count();

/// Calls body(i) for i in [0, count), split into contiguous chunks across workers.
/// body must be safe for concurrent invocation on distinct indices.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Evaluates fn(i) for every index into a vector (index order preserved).
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

/// Pairwise summation; the reduction tree depends only on values.size().
double pairwise_sum(std::span<const double> values);

}  // namespace cesaro
