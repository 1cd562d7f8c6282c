#ifndef WGBIND_PARALLEL_HPP
#define WGBIND_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace wgbind {

/// Runs fn(i) for i in [0, n) on up to `workers` threads. Work items must
/// be independent and write to pre-assigned slots so that results do not
/// depend on the worker count. workers <= 0 resolves to the WGBIND_WORKERS
/// environment variable, falling back to the hardware concurrency.
inline void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
    if (workers <= 0) {
        if (const char* env = std::getenv("WGBIND_WORKERS"))
            workers = std::atoi(env);
        if (workers <= 0)
            workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace wgbind

#endif
