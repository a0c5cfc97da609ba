#pragma once

// Tiny work-sharing helper: run `count` independent jobs indexed 0..count-1 on
// a fixed number of threads. Callers write each job's result into a slot owned
// by its index and reduce afterwards in index order, so results are identical
// for every thread count.

#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace roundtable {

inline int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw > 16 ? 16 : hw);
}

template <class Fn>
void run_indexed_jobs(int threads, std::int64_t count, Fn&& fn) {
    threads = resolve_thread_count(threads);
    if (threads <= 1 || count <= 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace roundtable
