#pragma once

#include <cstddef>
#include <cstdint>

#include "intsort/record.hpp"

namespace intsort {

// Plan for an LSD radix sort: how many counting passes to run and how wide
// each digit is. digits is minimal with base^digits > max key (digits = 1
// for empty or all-zero input), so base^(digits-1) always fits in 64 bits.
struct RadixPlan {
    std::uint64_t base = 10;
    std::uint32_t digits = 1;
};

// Stable shift-and-insert sort. Out of place: the input is left untouched
// and a sorted copy is returned. Quadratic; meant for small sequences and
// for the per-bucket phase of bucket_sort.
RecordSeq insertion_sort(const RecordSeq& input);

// digit(key) = floor(key / base^digit_index) mod base. Safe for any
// digit_index (high digits of small keys are 0).
std::uint64_t extract_digit(Key key, std::uint32_t digit_index, std::uint64_t base);

// Throws std::invalid_argument when base < 2.
RadixPlan build_radix_plan(const RecordSeq& input, std::uint64_t base);

// One stable counting pass over the given digit: count occurrences, prefix
// sum, then place records walking the input from last to first (the reverse
// walk is what keeps equal digits in input order).
// Throws std::invalid_argument when digit_index >= plan.digits.
RecordSeq counting_sort_by_digit(const RecordSeq& input, const RadixPlan& plan,
                                 std::uint32_t digit_index);

// Least-significant-digit radix sort: one counting pass per digit, least
// significant first. Stable; the output is identical for every base >= 2.
// Throws std::invalid_argument when base < 2.
RecordSeq radix_sort_lsd(const RecordSeq& input, std::uint64_t base = 10);

// Maps a key in [0, range_bound] to one of bucket_count range-partitioned
// buckets: floor(bucket_count * key / (range_bound + 1)). The +1 divisor
// keeps the maximal key inside the last bucket. Monotone nondecreasing in
// key; result always in [0, bucket_count - 1]. The product is computed in
// 128 bits (bucket_count <= 2^32, range_bound <= 2^40 can reach 2^72).
// Throws std::invalid_argument when key > range_bound or bucket_count == 0.
std::size_t bucket_index(Key key, std::size_t bucket_count, Key range_bound);

// Distribution sort: n buckets for n records, each bucket insertion-sorted,
// buckets concatenated in order. Stable. Out of place.
// Throws std::invalid_argument when a key exceeds range_bound.
RecordSeq bucket_sort(const RecordSeq& input, Key range_bound);

}  // namespace intsort
