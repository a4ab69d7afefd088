#ifndef FFRT_THREADS_HPP
#define FFRT_THREADS_HPP

#include <functional>

namespace ffrt {

// Number of worker threads: requested, or hardware concurrency when 0.
int thread_count(int requested);

// Run fn(i) for i in [0, nitems) on a fixed thread pool. Work items must be
// independent; callers merge results deterministically by index.
void parallel_for(int nitems, const std::function<void(int)>& fn, int threads = 0);

}  // namespace ffrt

#endif
