#pragma once

#include <cstdint>
#include <vector>

#include "intsort/alloc_meter.hpp"

namespace intsort {

// Non-negative integer key. Generated sequences keep keys in [0, range_bound]
// with range_bound <= 2^40, so products like n * key need (and get) 128-bit
// intermediates where they occur.
using Key = std::uint64_t;

inline constexpr Key kMaxRangeBound = Key{1} << 40;

// The sortable unit. Only `key` drives ordering; `tag` is an opaque payload
// the sorts must carry along untouched, which is what makes stability
// observable (generators and file readers set tag = original position).
struct Record {
    Key key = 0;
    std::uint64_t tag = 0;

    friend bool operator==(const Record&, const Record&) = default;
};

template <typename T>
using TrackedVector = std::vector<T, TrackingAllocator<T>>;

using RecordSeq = TrackedVector<Record>;

}  // namespace intsort
