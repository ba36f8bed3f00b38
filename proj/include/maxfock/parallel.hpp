#pragma once

#include <cstddef>
#include <functional>

namespace maxfock {

/// Worker cap from MAXFOCK_THREADS (default: hardware concurrency, at least 1).
int thread_limit();

/// Calls body(begin, end) over a partition of [0, n) on up to thread_limit() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace maxfock
