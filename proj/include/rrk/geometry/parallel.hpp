#pragma once

#include <cstddef>
#include <functional>

namespace rrk::geom {

// Worker count: RRK_THREADS if set (>= 1), otherwise hardware concurrency.
unsigned worker_count();

// Calls fn(i) for i in [0, n) on up to worker_count() threads. Each index is
// visited once; the first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rrk::geom
