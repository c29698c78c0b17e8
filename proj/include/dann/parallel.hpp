#pragma once

#include <cstddef>
#include <functional>

namespace dann {

/// Number of worker threads to use for a request of `threads` (0 = all cores).
unsigned resolve_threads(unsigned threads);

/// Calls body(i) for every i in [0, n) on up to `threads` workers. Work is
/// handed out by index, so callers that write only to slot i get results
/// independent of scheduling. The first exception thrown by a body is
/// rethrown after all workers finish.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace dann
