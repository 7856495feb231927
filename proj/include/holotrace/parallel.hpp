#pragma once

#include <cstddef>
#include <functional>

namespace holotrace {

// Worker count: HOLOTRACE_THREADS if set and positive, else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
// visited exactly once; callers write results by index so output order does
// not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace holotrace
