#pragma once

// Minimal worker-pool helper.  All parallelism in the library lives below a
// deterministic merge: chunks are processed independently and their results
// combined in chunk order, so any worker count produces identical output.

#include <thread>
#include <vector>

namespace smallcover {

inline int effective_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Run fn(chunk_index, begin, end) over [0, n) split into roughly equal
// chunks, one per worker; fn must only write to its own chunk's slot.
template <class Fn>
void parallel_chunks(size_t n, int workers, Fn fn) {
    int w = effective_workers(workers);
    if (n == 0) return;
    size_t chunks = std::min<size_t>(static_cast<size_t>(w), n);
    size_t per = (n + chunks - 1) / chunks;
    if (chunks <= 1) {
        fn(0, size_t(0), n);
        return;
    }
    std::vector<std::thread> pool;
    for (size_t c = 0; c < chunks; ++c) {
        size_t begin = c * per;
        size_t end = std::min(n, begin + per);
        if (begin >= end) break;
        pool.emplace_back([=] { fn(c, begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace smallcover
