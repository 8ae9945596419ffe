#include "intsort/sort.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace intsort {

namespace {

// Shift-and-insert loop, 0-indexed, in place. Strict > on keys keeps equal
// keys in arrival order.
void insertion_sort_in_place(std::span<Record> a) {
    for (std::size_t j = 1; j < a.size(); ++j) {
        const Record item = a[j];
        std::int64_t i = static_cast<std::int64_t>(j) - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)].key > item.key) {
            a[static_cast<std::size_t>(i) + 1] = a[static_cast<std::size_t>(i)];
            --i;
        }
        a[static_cast<std::size_t>(i) + 1] = item;
    }
}

// base^exp; callers guarantee the result fits (exp < digits of some key).
std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        result *= base;
    }
    return result;
}

}  // namespace

RecordSeq insertion_sort(const RecordSeq& input) {
    RecordSeq out = input;
    insertion_sort_in_place(out);
    return out;
}

std::uint64_t extract_digit(Key key, std::uint32_t digit_index, std::uint64_t base) {
    if (base < 2) {
        throw std::invalid_argument("extract_digit: base must be >= 2");
    }
    // Repeated division instead of base^digit_index: immune to overflow for
    // any digit_index, and high digits of small keys come out as 0.
    std::uint64_t v = key;
    for (std::uint32_t i = 0; i < digit_index && v != 0; ++i) {
        v /= base;
    }
    return v % base;
}

RadixPlan build_radix_plan(const RecordSeq& input, std::uint64_t base) {
    if (base < 2) {
        throw std::invalid_argument("build_radix_plan: base must be >= 2");
    }
    Key max_key = 0;
    for (const Record& r : input) {
        if (r.key > max_key) {
            max_key = r.key;
        }
    }
    // Minimal digit count with base^digits > max_key; 1 for empty/all-zero.
    std::uint32_t digits = 0;
    std::uint64_t v = max_key;
    do {
        v /= base;
        ++digits;
    } while (v != 0);
    return RadixPlan{base, digits};
}

RecordSeq counting_sort_by_digit(const RecordSeq& input, const RadixPlan& plan,
                                 std::uint32_t digit_index) {
    if (plan.base < 2) {
        throw std::invalid_argument("counting_sort_by_digit: base must be >= 2");
    }
    if (digit_index >= plan.digits) {
        throw std::invalid_argument(
            "counting_sort_by_digit: digit_index " + std::to_string(digit_index) +
            " out of range for a " + std::to_string(plan.digits) + "-digit plan");
    }
    // digit_index < digits implies base^digit_index <= max key, so the
    // divisor fits in 64 bits and each digit costs one division.
    const std::uint64_t divisor = pow_u64(plan.base, digit_index);
    const auto digit_of = [&](Key key) {
        return static_cast<std::size_t>((key / divisor) % plan.base);
    };

    TrackedVector<std::size_t> counts(static_cast<std::size_t>(plan.base), 0);
    for (const Record& r : input) {
        ++counts[digit_of(r.key)];
    }
    // counts[d] becomes the number of records with digit <= d.
    for (std::size_t d = 1; d < counts.size(); ++d) {
        counts[d] += counts[d - 1];
    }
    RecordSeq out(input.size());
    // Last to first: the final record with digit d lands at the end of d's
    // slot, so equal digits keep their input order.
    for (std::size_t j = input.size(); j-- > 0;) {
        const std::size_t d = digit_of(input[j].key);
        out[--counts[d]] = input[j];
    }
    return out;
}

RecordSeq radix_sort_lsd(const RecordSeq& input, std::uint64_t base) {
    const RadixPlan plan = build_radix_plan(input, base);
    RecordSeq current = input;
    for (std::uint32_t digit = 0; digit < plan.digits; ++digit) {
        current = counting_sort_by_digit(current, plan, digit);
    }
    return current;
}

std::size_t bucket_index(Key key, std::size_t bucket_count, Key range_bound) {
    if (bucket_count == 0) {
        throw std::invalid_argument("bucket_index: bucket_count must be >= 1");
    }
    if (key > range_bound) {
        throw std::invalid_argument(
            "bucket_index: key " + std::to_string(key) + " exceeds range bound " +
            std::to_string(range_bound) + " (sequence/spec mismatch)");
    }
    // bucket_count <= 2^32 and key <= 2^40 can push the product to 2^72.
    const unsigned __int128 product =
        static_cast<unsigned __int128>(bucket_count) * static_cast<unsigned __int128>(key);
    return static_cast<std::size_t>(product / (static_cast<unsigned __int128>(range_bound) + 1));
}

RecordSeq bucket_sort(const RecordSeq& input, Key range_bound) {
    const std::size_t n = input.size();
    RecordSeq out;
    if (n == 0) {
        return out;
    }
    TrackedVector<RecordSeq> buckets(n);
    for (const Record& r : input) {
        buckets[bucket_index(r.key, n, range_bound)].push_back(r);
    }
    out.reserve(n);
    for (RecordSeq& bucket : buckets) {
        insertion_sort_in_place(bucket);
        out.insert(out.end(), bucket.begin(), bucket.end());
    }
    return out;
}

}  // namespace intsort
