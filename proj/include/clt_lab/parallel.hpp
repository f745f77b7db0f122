#pragma once

#include <cstddef>
#include <functional>

namespace clt {

/// Worker count for internal parallelism: hardware concurrency, capped by the
/// CLT_LAB_THREADS environment variable when it holds a positive integer.
unsigned default_thread_count();

/// Calls body(begin, end) on disjoint chunks covering [0, count). Runs inline
/// when threads <= 1 or the range is small. threads == 0 selects
/// default_thread_count().
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body,
                  unsigned threads = 0, std::size_t min_chunk = 256);

} // namespace clt
