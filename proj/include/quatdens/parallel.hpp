#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace quatdens {

inline int worker_count() {
    if (const char* s = std::getenv("QUATDENS_THREADS")) {
        int n = std::atoi(s);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, total) into a fixed number of chunks, evaluates `fn(lo, hi)`
// per chunk on a worker pool, and returns the per-chunk results in chunk
// order. The chunk layout does not depend on the worker count, so any
// fold over the result vector is deterministic regardless of scheduling.
template <class T, class Fn>
std::vector<T> parallel_chunks(long long total, Fn fn) {
    const int chunks = 64;
    std::vector<T> out(chunks);
    if (total <= 0) return out;
    int threads = worker_count();
    if (threads == 1 || total < 1 << 16) {
        for (int c = 0; c < chunks; ++c) {
            long long lo = total * c / chunks, hi = total * (c + 1) / chunks;
            out[c] = fn(lo, hi);
        }
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                int c = next.fetch_add(1);
                if (c >= chunks) return;
                long long lo = total * c / chunks, hi = total * (c + 1) / chunks;
                out[c] = fn(lo, hi);
            }
        });
    for (auto& th : pool) th.join();
    return out;
}

template <class Fn>
long long parallel_count(long long total, Fn fn) {
    auto parts = parallel_chunks<long long>(total, fn);
    long long s = 0;
    for (long long v : parts) s += v;
    return s;
}

} // namespace quatdens
