#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace perspec {

/// Runs f(begin, end) over disjoint chunks of [0, n), possibly on several
/// threads. Callers keep determinism by writing only to their own chunk;
/// chunk boundaries do not depend on the thread count at a fixed n.
template <typename ChunkFn>
void parallel_chunks(std::size_t n, std::size_t min_per_thread, ChunkFn&& f) {
    if (n == 0) return;
    std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (min_per_thread > 0) workers = std::min(workers, std::max<std::size_t>(1, n / min_per_thread));
    if (workers <= 1) {
        f(std::size_t{0}, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t begin = 0; begin < n; begin += chunk) {
        const std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([&f, begin, end] { f(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace perspec
