#ifndef SKA_PARALLEL_HPP
#define SKA_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ska {

inline unsigned default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs fn(i) for i in [0, n); results must be written into caller-owned slots.
template <class Fn>
void parallel_for(uint64_t n, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<uint64_t> next{0};
    auto worker = [&]() {
        while (true) {
            uint64_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> threads;
    unsigned w = static_cast<unsigned>(std::min<uint64_t>(jobs, n));
    threads.reserve(w);
    for (unsigned t = 0; t < w; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

// Least index in [0, n) where pred(i) is true, or n. Work above the current
// best index is skipped, so the result is independent of thread scheduling.
template <class Pred>
uint64_t parallel_find_first(uint64_t n, unsigned jobs, Pred&& pred) {
    if (jobs <= 1 || n <= 1) {
        for (uint64_t i = 0; i < n; ++i)
            if (pred(i)) return i;
        return n;
    }
    std::atomic<uint64_t> best{n};
    std::atomic<uint64_t> next{0};
    auto worker = [&]() {
        while (true) {
            uint64_t i = next.fetch_add(1);
            if (i >= n) return;
            if (i >= best.load()) continue;
            if (pred(i)) {
                uint64_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> threads;
    unsigned w = static_cast<unsigned>(std::min<uint64_t>(jobs, n));
    threads.reserve(w);
    for (unsigned t = 0; t < w; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return best.load();
}

}  // namespace ska

#endif
