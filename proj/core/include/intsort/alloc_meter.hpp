#pragma once

#include <cstddef>
#include <cstdint>
#include <new>

namespace intsort {

// Process-global accounting of bytes that flow through TrackingAllocator.
// The bench harness resets the meter, runs one sort, and reads the peak to
// obtain the sort's auxiliary high-water mark without touching the input
// sequence (anything allocated before the reset is simply not counted).
//
// current_bytes() may go negative when memory allocated before a reset is
// freed afterwards; peak_bytes() only grows from allocations made since the
// last reset. Counters are atomic, so concurrent sorts do not race, but
// their allocations land in the same meter -- meaningful peak measurements
// require one sort at a time.
namespace alloc_meter {

void reset();
std::int64_t current_bytes();
std::int64_t peak_bytes();

namespace detail {
void add(std::size_t bytes);
void sub(std::size_t bytes);
}  // namespace detail

}  // namespace alloc_meter

// Minimal std allocator that reports every allocation to the meter.
// All sequence and scratch buffers in the library use it, which is what
// makes measure_peak_memory() see buckets, counting arrays and output
// buffers without any per-algorithm instrumentation.
template <typename T>
class TrackingAllocator {
public:
    using value_type = T;

    TrackingAllocator() noexcept = default;
    template <typename U>
    TrackingAllocator(const TrackingAllocator<U>&) noexcept {}

    T* allocate(std::size_t n) {
        const std::size_t bytes = n * sizeof(T);
        alloc_meter::detail::add(bytes);
        if constexpr (alignof(T) > __STDCPP_DEFAULT_NEW_ALIGNMENT__) {
            return static_cast<T*>(::operator new(bytes, std::align_val_t{alignof(T)}));
        } else {
            return static_cast<T*>(::operator new(bytes));
        }
    }

    void deallocate(T* p, std::size_t n) noexcept {
        alloc_meter::detail::sub(n * sizeof(T));
        if constexpr (alignof(T) > __STDCPP_DEFAULT_NEW_ALIGNMENT__) {
            ::operator delete(p, std::align_val_t{alignof(T)});
        } else {
            ::operator delete(p);
        }
    }

    friend bool operator==(const TrackingAllocator&, const TrackingAllocator&) { return true; }
    friend bool operator!=(const TrackingAllocator&, const TrackingAllocator&) { return false; }
};

}  // namespace intsort
