#include "intsort/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "intsort/rng.hpp"

namespace intsort {

namespace {

// ceil(2n/3) without overflow for any n the harness can allocate.
std::uint64_t case6_required_range(std::size_t n) {
    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
    return (two_n + 2) / 3;
}

TrackedVector<Key> uniform_keys(SplitMix64& rng, std::size_t n, Key range_bound) {
    TrackedVector<Key> keys;
    keys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        keys.push_back(rng.below(range_bound + 1));
    }
    return keys;
}

// ceil(n/3) copies of the repeated value plus pairwise-distinct fillers:
// walk start + j*stride mod (range_bound + 1) with stride coprime to the
// modulus, skipping the repeated value. The walk visits every residue once,
// so the fillers are distinct without any collision bookkeeping.
TrackedVector<Key> duplicate_heavy_keys(SplitMix64& rng, std::size_t n,
                                        Key range_bound, Key repeated) {
    const std::size_t dup_count = (n + 2) / 3;
    const std::size_t distinct_count = n - dup_count;
    const std::uint64_t modulus = range_bound + 1;

    TrackedVector<Key> keys;
    keys.reserve(n);
    keys.insert(keys.end(), dup_count, repeated);

    if (distinct_count > 0) {
        std::uint64_t stride = 0;
        do {
            stride = rng.below(modulus);
        } while (stride == 0 || std::gcd(stride, modulus) != 1);
        std::uint64_t v = rng.below(modulus);
        while (keys.size() < n) {
            if (v != repeated) {
                keys.push_back(v);
            }
            v += stride;
            if (v >= modulus) {
                v -= modulus;
            }
        }
    }

    // Fisher-Yates; without it the duplicate block would make every case-6
    // sequence two-thirds sorted.
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(keys[i - 1], keys[j]);
    }
    return keys;
}

}  // namespace

Key default_range_bound(int case_id) {
    switch (case_id) {
        case 4:
            return 10'000;  // small range
        case 5:
            return 100'000'000;  // large range
        default:
            return 1'000'000;
    }
}

InputSpec InputSpec::resolved() const {
    if (case_id < 1 || case_id > 6) {
        throw std::invalid_argument("InputSpec: case_id must be in 1..6, got " +
                                    std::to_string(case_id));
    }
    InputSpec spec = *this;
    if (!spec.range_bound) {
        spec.range_bound = default_range_bound(case_id);
    }
    const Key bound = *spec.range_bound;
    if (bound > kMaxRangeBound) {
        throw std::invalid_argument("InputSpec: range_bound exceeds 2^40");
    }
    if (spec.sorted_fraction < 0.0 || spec.sorted_fraction > 1.0) {
        throw std::invalid_argument("InputSpec: sorted_fraction must be in [0, 1]");
    }
    if (case_id == 6) {
        if (!spec.repeated_value) {
            spec.repeated_value = bound / 2;
        }
        if (*spec.repeated_value > bound) {
            throw std::invalid_argument("InputSpec: repeated_value exceeds range_bound");
        }
        if (case6_required_range(spec.n) > bound) {
            throw std::invalid_argument(
                "InputSpec: case 6 infeasible, ceil(2n/3) = " +
                std::to_string(case6_required_range(spec.n)) + " exceeds range_bound " +
                std::to_string(bound) + " (not enough distinct values)");
        }
    }
    return spec;
}

RecordSeq generate(const InputSpec& raw) {
    const InputSpec spec = raw.resolved();
    const Key bound = *spec.range_bound;
    const std::size_t n = spec.n;
    SplitMix64 rng(spec.seed);

    TrackedVector<Key> keys;
    switch (spec.case_id) {
        case 1:
        case 4:
        case 5:
            keys = uniform_keys(rng, n, bound);
            break;
        case 2:
            keys = uniform_keys(rng, n, bound);
            std::sort(keys.begin(), keys.end());
            break;
        case 3: {
            keys = uniform_keys(rng, n, bound);
            std::sort(keys.begin(), keys.end());
            const auto swaps =
                static_cast<std::size_t>((1.0 - spec.sorted_fraction) * static_cast<double>(n));
            for (std::size_t s = 0; s < swaps; ++s) {
                const auto a = static_cast<std::size_t>(rng.below(n));
                const auto b = static_cast<std::size_t>(rng.below(n));
                std::swap(keys[a], keys[b]);
            }
            break;
        }
        case 6:
            keys = duplicate_heavy_keys(rng, n, bound, *spec.repeated_value);
            break;
        default:
            throw std::invalid_argument("InputSpec: case_id must be in 1..6");
    }

    RecordSeq out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = Record{keys[i], static_cast<std::uint64_t>(i)};
    }
    return out;
}

}  // namespace intsort
