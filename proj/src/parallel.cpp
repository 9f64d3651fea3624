#include "orbitcalc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace orbitcalc {

namespace {
int g_jobs = 1;
}

void set_parallel_jobs(int jobs) { g_jobs = std::max(1, jobs); }
int parallel_jobs() { return g_jobs; }

void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    int jobs = std::min<size_t>(static_cast<size_t>(g_jobs), count) > 0
                   ? static_cast<int>(std::min<size_t>(static_cast<size_t>(g_jobs), count))
                   : 1;
    if (jobs <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next(0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace orbitcalc
