#include "intsort/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace intsort::verify {

namespace {

// Top-down merge, left element wins ties: that is the whole stability
// argument, so no helper from the sort implementations is reused here.
void merge_halves(std::vector<Record>& work, std::vector<Record>& scratch,
                  std::size_t lo, std::size_t mid, std::size_t hi) {
    std::size_t left = lo;
    std::size_t right = mid;
    std::size_t out = lo;
    while (left < mid && right < hi) {
        if (work[right].key < work[left].key) {
            scratch[out++] = work[right++];
        } else {
            scratch[out++] = work[left++];
        }
    }
    while (left < mid) {
        scratch[out++] = work[left++];
    }
    while (right < hi) {
        scratch[out++] = work[right++];
    }
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              work.begin() + static_cast<std::ptrdiff_t>(lo));
}

void merge_sort_range(std::vector<Record>& work, std::vector<Record>& scratch,
                      std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) {
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    merge_sort_range(work, scratch, lo, mid);
    merge_sort_range(work, scratch, mid, hi);
    merge_halves(work, scratch, lo, mid, hi);
}

std::unordered_map<Key, std::vector<std::uint64_t>> tags_by_key(const RecordSeq& seq) {
    std::unordered_map<Key, std::vector<std::uint64_t>> map;
    map.reserve(seq.size());
    for (const Record& r : seq) {
        map[r.key].push_back(r.tag);
    }
    return map;
}

}  // namespace

RecordSeq oracle_sort(const RecordSeq& input) {
    std::vector<Record> work(input.begin(), input.end());
    std::vector<Record> scratch(work.size());
    merge_sort_range(work, scratch, 0, work.size());
    return RecordSeq(work.begin(), work.end());
}

bool is_sorted(const RecordSeq& seq) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i - 1].key > seq[i].key) {
            return false;
        }
    }
    return true;
}

bool is_permutation(const RecordSeq& a, const RecordSeq& b) {
    if (a.size() != b.size()) {
        return false;
    }
    const auto pair_less = [](const Record& x, const Record& y) {
        return x.key != y.key ? x.key < y.key : x.tag < y.tag;
    };
    std::vector<Record> sa(a.begin(), a.end());
    std::vector<Record> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end(), pair_less);
    std::sort(sb.begin(), sb.end(), pair_less);
    return sa == sb;
}

bool is_key_permutation(const RecordSeq& a, const RecordSeq& b) {
    if (a.size() != b.size()) {
        return false;
    }
    std::vector<Key> ka;
    std::vector<Key> kb;
    ka.reserve(a.size());
    kb.reserve(b.size());
    for (const Record& r : a) {
        ka.push_back(r.key);
    }
    for (const Record& r : b) {
        kb.push_back(r.key);
    }
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

bool is_stable(const RecordSeq& input, const RecordSeq& output) {
    if (!is_permutation(input, output)) {
        throw std::invalid_argument(
            "is_stable: output is not a permutation of input (wrong, not unstable)");
    }
    return tags_by_key(input) == tags_by_key(output);
}

}  // namespace intsort::verify
