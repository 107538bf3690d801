#pragma once

#include <cstddef>
#include <functional>

namespace vortexlab {

/// Worker count: VORTEXLAB_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

/// Calls body(i) for i in [0, n) across `workers` threads (0 = worker_count()).
/// Each index is visited exactly once; the first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned workers = 0);

}  // namespace vortexlab
