#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace fpcutoff {

// Resolve a thread-count request: 0 means auto (hardware concurrency,
// CUTOFF_THREADS environment variable wins if set and positive).
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CUTOFF_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Static block partition of [0, n) across up to `threads` workers.
// The partition (and therefore any seeded work) depends only on n, never on
// the thread count, so results are identical for any --threads value.
template <typename Fn>
void parallel_for_blocks(std::size_t n, int threads, std::size_t block, Fn&& fn) {
    if (n == 0) return;
    const std::size_t nblocks = (n + block - 1) / block;
    auto run_block = [&](std::size_t bi) {
        const std::size_t lo = bi * block;
        const std::size_t hi = lo + block < n ? lo + block : n;
        fn(bi, lo, hi);
    };
    const int workers = threads > 1 ? threads : 1;
    if (workers == 1 || nblocks == 1) {
        for (std::size_t bi = 0; bi < nblocks; ++bi) run_block(bi);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t bi = static_cast<std::size_t>(w); bi < nblocks;
                 bi += static_cast<std::size_t>(workers)) {
                run_block(bi);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace fpcutoff
