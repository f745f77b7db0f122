#include "clt_lab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace clt {

unsigned default_thread_count()
{
    unsigned count = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CLT_LAB_THREADS"); env != nullptr) {
        try {
            const long cap = std::stol(env);
            if (cap > 0) {
                count = std::min<unsigned long>(count, static_cast<unsigned long>(cap));
            }
        } catch (const std::exception&) {
            // Ignore malformed values.
        }
    }
    return count;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body,
                  unsigned threads, std::size_t min_chunk)
{
    if (count == 0) {
        return;
    }
    if (threads == 0) {
        threads = default_thread_count();
    }
    const std::size_t max_workers = std::max<std::size_t>(1, count / std::max<std::size_t>(1, min_chunk));
    const std::size_t workers = std::min<std::size_t>(threads, max_workers);
    if (workers <= 1) {
        body(0, count);
        return;
    }

    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin < end) {
            pool.emplace_back(body, begin, end);
        }
    }
    body(0, std::min(count, chunk));
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace clt
