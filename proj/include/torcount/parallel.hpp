#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace torcount {

// Runs fn(chunk) for chunk = 0..n_chunks-1 on up to `threads` workers. Callers
// write per-chunk results into preallocated slots and reduce in chunk order
// afterwards, which keeps results identical for every thread count.
template <class Fn>
void parallel_chunks(long long n_chunks, int threads, Fn&& fn) {
    if (n_chunks <= 0) return;
    if (threads < 1) threads = 1;
    if (threads == 1 || n_chunks == 1) {
        for (long long i = 0; i < n_chunks; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= n_chunks) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nw = static_cast<int>(std::min<long long>(threads, n_chunks));
    pool.reserve(nw);
    for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace torcount
