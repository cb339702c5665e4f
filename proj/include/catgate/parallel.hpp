#pragma once

#include <cstddef>
#include <functional>

namespace catgate {

/// Default worker count: hardware concurrency, at least 1.
unsigned default_threads();

/// Calls body(i) for i in [0, n) on at most `threads` workers. The first
/// exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace catgate
