#pragma once

// Chunked parallel map-reduce over an index range. Chunk results are
// stored by chunk index and merged in ascending order, so the output is
// identical for any worker count. Worker count comes from APCHECK_WORKERS
// (default: hardware concurrency).

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace apcheck {

inline unsigned worker_count() {
    if (const char* env = std::getenv("APCHECK_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// per_chunk(lo, hi) -> R over [lo, hi); merge(acc, R) folds in chunk order.
template <class R, class PerChunk, class Merge>
R parallel_chunks(int64_t lo, int64_t hi, int64_t chunk, R init, PerChunk&& per_chunk, Merge&& merge) {
    if (lo >= hi) return init;
    if (chunk < 1) chunk = 1;
    const int64_t n_chunks = (hi - lo + chunk - 1) / chunk;
    const unsigned workers = std::min<int64_t>(worker_count(), n_chunks);
    std::vector<R> results(static_cast<size_t>(n_chunks));
    if (workers <= 1) {
        for (int64_t c = 0; c < n_chunks; ++c) {
            int64_t a = lo + c * chunk;
            results[static_cast<size_t>(c)] = per_chunk(a, std::min(hi, a + chunk));
        }
    } else {
        std::atomic<int64_t> next{0};
        auto work = [&] {
            for (;;) {
                int64_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                int64_t a = lo + c * chunk;
                results[static_cast<size_t>(c)] = per_chunk(a, std::min(hi, a + chunk));
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    R acc = init;
    for (auto& r : results) merge(acc, r);
    return acc;
}

}  // namespace apcheck
