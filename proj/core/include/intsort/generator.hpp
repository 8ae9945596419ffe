#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "intsort/record.hpp"

namespace intsort {

// Fully determines one benchmark input sequence. The six cases:
//   1  uniform random keys in [0, range_bound]
//   2  case-1 keys, sorted nondecreasing
//   3  case-2 keys with floor((1 - sorted_fraction) * n) random pair swaps
//   4  uniform, small range (default range_bound 10^4)
//   5  uniform, large range (default range_bound 10^8)
//   6  ceil(n/3) copies of repeated_value, the rest pairwise distinct,
//      whole sequence shuffled
// range_bound (and repeated_value for case 6) are defaulted per case when
// left unset; see default_range_bound().
struct InputSpec {
    int case_id = 1;
    std::size_t n = 0;
    std::optional<Key> range_bound;      // inclusive; keys may equal it
    std::uint64_t seed = 0;
    std::optional<Key> repeated_value;   // case 6 only; defaults to range_bound / 2
    double sorted_fraction = 0.95;       // case 3 only

    // Copy with range_bound / repeated_value resolved to their per-case
    // defaults. Throws std::invalid_argument on an invalid spec (bad case
    // id, range_bound > 2^40, sorted_fraction outside [0, 1], repeated
    // value out of range, or case-6 infeasibility ceil(2n/3) > range_bound).
    InputSpec resolved() const;
};

// Per-case default for the inclusive key range bound.
Key default_range_bound(int case_id);

// Deterministic: the same spec always yields the same sequence. Tags are
// the positions 0..n-1 of the returned order. Validates via resolved().
RecordSeq generate(const InputSpec& spec);

}  // namespace intsort
