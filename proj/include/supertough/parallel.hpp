#ifndef SUPERTOUGH_PARALLEL_HPP_
#define SUPERTOUGH_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace supertough {

/// 0 means "one worker per hardware thread".
inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(i) for every i in [0, count) on up to `workers` threads.
/// Work is handed out in increasing index order. The first exception thrown
/// by any body is rethrown on the calling thread after all workers stop.
template<typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count || failed.load(std::memory_order_relaxed)) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock{error_mutex};
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Ordered first-hit search over chunks [0, count).
///
/// search(i) scans chunk i and returns true on a hit. Chunks after the lowest
/// hit found so far are skipped, chunks before it always complete, so the
/// returned index (or `count` when nothing hits) is the lowest hitting chunk
/// for any worker count.
template<typename Search>
std::size_t parallel_find_first(std::size_t count, unsigned workers, Search&& search) {
    std::atomic<std::size_t> first{count};
    parallel_for(count, workers, [&](std::size_t i) {
        if (i > first.load(std::memory_order_relaxed)) return;
        if (!search(i)) return;
        std::size_t cur = first.load(std::memory_order_relaxed);
        while (i < cur && !first.compare_exchange_weak(cur, i)) {
        }
    });
    return first.load();
}

}  // namespace supertough

#endif  // SUPERTOUGH_PARALLEL_HPP_
