#pragma once

#include <initializer_list>
#include <vector>

#include "intsort/record.hpp"

namespace intsort::testing {

// Sequence from bare keys, tag = original position.
inline RecordSeq seq_of(std::initializer_list<Key> keys) {
    RecordSeq seq;
    seq.reserve(keys.size());
    std::uint64_t tag = 0;
    for (Key key : keys) {
        seq.push_back(Record{key, tag++});
    }
    return seq;
}

inline std::vector<Key> keys_of(const RecordSeq& seq) {
    std::vector<Key> keys;
    keys.reserve(seq.size());
    for (const Record& r : seq) {
        keys.push_back(r.key);
    }
    return keys;
}

inline std::vector<std::uint64_t> tags_of(const RecordSeq& seq) {
    std::vector<std::uint64_t> tags;
    tags.reserve(seq.size());
    for (const Record& r : seq) {
        tags.push_back(r.tag);
    }
    return tags;
}

}  // namespace intsort::testing
