#pragma once

#include <cstddef>
#include <functional>

namespace heiskakeya {

/// Worker count: requested if positive, else HEISKAKEYA_THREADS, else
/// hardware concurrency; always >= 1.
int thread_budget(int requested = 0);

/// Runs fn(0..n-1) on up to `threads` workers.  Tasks must be independent;
/// determinism is the caller's duty (index-derived seeds, indexed outputs).
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace heiskakeya
