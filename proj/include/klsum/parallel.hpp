#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace klsum {

// Process-wide worker count for data-parallel loops. Batch operations
// partition work by index and merge results in index order, so the
// outcome never depends on this value.
unsigned num_threads();
void set_num_threads(unsigned n);

// Runs fn(i) for i in [0, n), split into contiguous blocks over the
// configured worker count. fn must only write to state owned by index i
// (typically a preassigned slot in a results vector); the caller then
// reduces the slots sequentially. Exceptions from workers are rethrown.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = std::max(1u, num_threads());
    if (workers == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, &errs, w, lo, hi]() {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

} // namespace klsum
