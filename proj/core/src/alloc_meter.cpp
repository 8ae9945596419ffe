#include "intsort/alloc_meter.hpp"

#include <atomic>

namespace intsort::alloc_meter {

namespace {
std::atomic<std::int64_t> g_current{0};
std::atomic<std::int64_t> g_peak{0};
}  // namespace

void reset() {
    g_current.store(0, std::memory_order_relaxed);
    g_peak.store(0, std::memory_order_relaxed);
}

std::int64_t current_bytes() { return g_current.load(std::memory_order_relaxed); }

std::int64_t peak_bytes() { return g_peak.load(std::memory_order_relaxed); }

namespace detail {

void add(std::size_t bytes) {
    const std::int64_t now =
        g_current.fetch_add(static_cast<std::int64_t>(bytes), std::memory_order_relaxed) +
        static_cast<std::int64_t>(bytes);
    std::int64_t peak = g_peak.load(std::memory_order_relaxed);
    while (now > peak &&
           !g_peak.compare_exchange_weak(peak, now, std::memory_order_relaxed)) {
    }
}

void sub(std::size_t bytes) {
    g_current.fetch_sub(static_cast<std::int64_t>(bytes), std::memory_order_relaxed);
}

}  // namespace detail

}  // namespace intsort::alloc_meter
