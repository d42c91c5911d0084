// parallel.hpp — bounded worker pool for independent grid points

#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace sptsim {

// Worker count: SPT_SIM_THREADS when set (clamped to >= 1), otherwise the
// hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("SPT_SIM_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Run fn(i) for i in [0, n); results must be written to disjoint slots so the
// outcome is independent of scheduling.
inline void parallel_for(long n, const std::function<void(long)>& fn) {
    if (n <= 0) return;
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(n));
    if (workers <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace sptsim
