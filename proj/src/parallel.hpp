#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace levigon::detail {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Run fn(task) for task = 0..tasks-1 on a worker pool. Results land in a
/// slot per task, so the caller's fold order is fixed and the outcome does
/// not depend on scheduling.
template <class R, class Fn>
std::vector<R> run_tasks(size_t tasks, int threads, Fn&& fn) {
    std::vector<R> results(tasks);
    const int T = resolve_threads(threads);
    if (T <= 1 || tasks <= 1) {
        for (size_t t = 0; t < tasks; ++t) results[t] = fn(t);
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t t = next.fetch_add(1);
            if (t >= tasks) return;
            results[t] = fn(t);
        }
    };
    std::vector<std::thread> pool;
    const int nw = static_cast<int>(std::min<size_t>(static_cast<size_t>(T), tasks));
    pool.reserve(nw);
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace levigon::detail
