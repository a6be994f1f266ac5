#pragma once

#include <cstddef>
#include <functional>

namespace halcbc {

// Worker count resolution: explicit request if > 0, else the
// HALTON_CBC_THREADS environment variable, else hardware concurrency.
int resolve_thread_count(int requested);

// Runs fn(worker, index) for index in [0, count), split into contiguous
// blocks over at most `threads` workers. Callers must not let results depend
// on execution order: write into index-addressed slots and reduce afterwards,
// so output is identical for any worker count.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(int worker, std::size_t index)>& fn);

} // namespace halcbc
