#include "penmax/parallel.hpp"

#include <atomic>
#include <thread>

namespace penmax {

namespace {
std::atomic<int> g_max_workers{0};  // 0 = uninitialized, use hardware
}

int hardware_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
#endif
}

int max_workers() {
    int k = g_max_workers.load(std::memory_order_relaxed);
    return k > 0 ? k : hardware_workers();
}

void set_max_workers(int k) { g_max_workers.store(k > 0 ? k : 0, std::memory_order_relaxed); }

namespace detail {
bool in_parallel_region() {
#ifdef _OPENMP
    return omp_in_parallel() != 0;
#else
    return false;
#endif
}
}  // namespace detail

}  // namespace penmax
