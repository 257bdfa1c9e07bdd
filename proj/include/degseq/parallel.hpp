#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace degseq {

// Runs fn(0..count-1), chunked across `threads` workers. Each index is
// handled exactly once and results are written by index, so reductions stay
// deterministic regardless of thread count.
inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (threads > count) threads = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// EXTREMAL_DEGSEQ_THREADS overrides the requested degree of parallelism.
inline unsigned resolve_threads(unsigned requested) {
    if (const char* env = std::getenv("EXTREMAL_DEGSEQ_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return requested >= 1 ? requested : 1;
}

}  // namespace degseq
