#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace cea {

/// Splits [0, n) into at most `threads` contiguous chunks and runs `work`
/// on each in its own thread. Chunk results must be combined by the caller
/// in chunk order so outcomes do not depend on the thread count.
template <typename Work>
void parallel_chunks(size_t n, int threads, Work &&work)
{
    threads = std::max(1, threads);
    const size_t nthreads = std::min<size_t>(threads, n == 0 ? 1 : n);
    if (nthreads <= 1) {
        work(size_t(0), n, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const size_t chunk = (n + nthreads - 1) / nthreads;
    for (size_t t = 0; t < nthreads; ++t) {
        const size_t begin = t * chunk;
        const size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&work, begin, end, t] { work(begin, end, t); });
    }
    for (auto &th : pool) th.join();
}

} // namespace cea
