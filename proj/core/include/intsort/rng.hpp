#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace intsort {

// splitmix64 (Vigna's fixed-increment SplittableRandom variant): 64 bits of
// state, add the golden-gamma constant, two xorshift-multiply mixing steps.
// Chosen over the standard library engines so that a seed produces the same
// stream on every platform and toolchain.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound): reject the top partial block, i.e.
    // values >= bound * floor(2^64 / bound), then reduce mod bound.
    // Throws std::invalid_argument when bound == 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) {
            throw std::invalid_argument("SplitMix64::below: bound must be >= 1");
        }
        // 2^64 mod bound, computed without the 2^64 literal.
        const std::uint64_t rem =
            (std::numeric_limits<std::uint64_t>::max() - bound + 1) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x <= std::numeric_limits<std::uint64_t>::max() - rem) {
                return x % bound;
            }
        }
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

}  // namespace intsort
