#pragma once

#include "intsort/record.hpp"

namespace intsort::verify {

// Ground-truth stable sort: a top-down merge sort written independently of
// the algorithms under test (no shared helpers), so a bug in sorting code
// cannot validate itself. Allowed to be slow.
RecordSeq oracle_sort(const RecordSeq& input);

// True iff keys are nondecreasing. Empty sequences are sorted.
bool is_sorted(const RecordSeq& seq);

// True iff the multisets of (key, tag) pairs are equal.
bool is_permutation(const RecordSeq& a, const RecordSeq& b);

// True iff the key multisets are equal, tags ignored. This is the
// permutation check available for sequence files, where tags are positional
// and not preserved across a sort.
bool is_key_permutation(const RecordSeq& a, const RecordSeq& b);

// True iff for every key value the tags carrying that key appear in the
// same relative order in input and output. Works for arbitrary tags, not
// just original indices. Throws std::invalid_argument when output is not a
// permutation of input (that is "wrong", not "unstable").
bool is_stable(const RecordSeq& input, const RecordSeq& output);

}  // namespace intsort::verify
