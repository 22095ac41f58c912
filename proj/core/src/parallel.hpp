#pragma once

// Internal chunked parallel loop.  Chunks are contiguous index ranges and
// every result slot is owned by exactly one index, so outputs do not depend
// on the thread count.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace polarcheck::detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

inline void parallel_for(int64_t begin, int64_t end, int threads,
                         const std::function<void(int64_t, int64_t)>& chunk_fn) {
    const int64_t count = end - begin;
    if (count <= 0) return;
    int t = std::min<int64_t>(resolve_threads(threads), count);
    if (t <= 1) {
        chunk_fn(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    const int64_t chunk = (count + t - 1) / t;
    for (int i = 0; i < t; ++i) {
        int64_t lo = begin + i * chunk;
        int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(chunk_fn, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace polarcheck::detail
