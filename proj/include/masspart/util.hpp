#pragma once

// Small shared helpers: compensated summation and a deterministic
// replica-parallel loop. Parallelism never changes results: work is
// partitioned by index, every worker writes only its own slots, and all
// reductions happen afterwards in index order on one thread.

#include <atomic>
#include <cstddef>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace masspart {

// Neumaier variant of Kahan summation; exact enough that atom totals are
// reproducible and |sum - 1| stays far below the 1e-9 partition tolerance.
inline double neumaier_sum(const std::vector<double>& xs) {
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

class KahanAccumulator {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Runs fn(i) for i in [0, n) across `workers` threads with a static block
// partition. fn must only touch state owned by index i. The first exception
// thrown by any worker is rethrown on the calling thread after all workers
// have joined, so failures surface the same way as in the serial path.
template <class Fn>
void parallel_for_indexed(std::size_t n, unsigned workers, Fn&& fn) {
    if (n == 0) return;
    if (workers <= 1 || n < 2 * workers) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::atomic<bool> has_error{false};
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = static_cast<std::size_t>(w) * chunk;
        if (lo >= n) break;
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([lo, hi, w, &fn, &first_error, &has_error] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                // exchange guard: at most one worker may write first_error
                if (!has_error.exchange(true)) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

inline unsigned default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : (hw > 8u ? 8u : hw);
}

} // namespace masspart
