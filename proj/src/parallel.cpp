#include "klsum/parallel.hpp"

#include <atomic>

namespace klsum {

namespace {
std::atomic<unsigned> g_threads{1};
}

unsigned num_threads() { return g_threads.load(std::memory_order_relaxed); }

void set_num_threads(unsigned n) { g_threads.store(n == 0 ? 1 : n, std::memory_order_relaxed); }

} // namespace klsum
