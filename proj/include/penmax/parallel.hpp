#pragma once

#include <exception>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace penmax {

/// Process-wide worker-count knob (set once by the CLI / test driver).
/// Every parallel loop in the library writes results into preassigned slots,
/// so outputs are bit-identical for any worker count.
int max_workers();
void set_max_workers(int k);
int hardware_workers();

/// Scoped override, for tests that compare serial vs parallel runs.
class WorkerGuard {
public:
    explicit WorkerGuard(int k) : saved_(max_workers()) { set_max_workers(k); }
    ~WorkerGuard() { set_max_workers(saved_); }

private:
    int saved_;
};

namespace detail {
bool in_parallel_region();
}

/// Run fn(i) for i in [0, n). Exceptions are captured per index and the
/// lowest-index one is rethrown after the loop, matching serial behavior.
template <typename F>
void parallel_for(int n, F&& fn) {
    if (n <= 0) return;
    int workers = max_workers();
#ifdef _OPENMP
    if (workers > 1 && n > 1 && !detail::in_parallel_region()) {
        std::vector<std::exception_ptr> errs(static_cast<size_t>(n));
        bool failed = false;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers) shared(errs, failed)
        for (int i = 0; i < n; ++i) {
            try {
                fn(i);
            } catch (...) {
                errs[i] = std::current_exception();
#pragma omp atomic write
                failed = true;
            }
        }
        if (failed) {
            for (auto& e : errs)
                if (e) std::rethrow_exception(e);
        }
        return;
    }
#endif
    (void)workers;
    for (int i = 0; i < n; ++i) fn(i);
}

}  // namespace penmax
