#pragma once

#include <cstddef>
#include <functional>

namespace limbforge {

/// Worker count: LIMBFORGE_THREADS if set to a positive integer, otherwise
/// the machine's hardware concurrency (at least 1).
unsigned worker_count();

/// Calls `body(i)` for every i in [0, n) on up to `worker_count()` threads.
/// The first exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace limbforge
