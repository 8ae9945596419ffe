#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "intsort/rng.hpp"

using intsort::SplitMix64;

TEST_CASE("splitmix64 matches the published reference stream") {
    // First outputs of the reference implementation for seed 0.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("identical seeds give identical streams") {
    SplitMix64 a(0xdeadbeef);
    SplitMix64 b(0xdeadbeef);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next() == b.next());
    }
}

TEST_CASE("nearby seeds diverge immediately") {
    SplitMix64 a(1);
    SplitMix64 b(2);
    bool differed = false;
    for (int i = 0; i < 10; ++i) {
        if (a.next() != b.next()) {
            differed = true;
        }
    }
    CHECK(differed);
}

TEST_CASE("below(1) is always zero and below(0) throws") {
    SplitMix64 rng(42);
    for (int i = 0; i < 50; ++i) {
        CHECK(rng.below(1) == 0);
    }
    CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}

TEST_CASE("below(bound) stays under bound") {
    SplitMix64 rng(9);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t bound = 1 + rng.next() % 1000;
        CHECK(rng.below(bound) < bound);
    }
}

TEST_CASE("below(10) frequencies are uniform to 5 sigma over 10^6 draws") {
    SplitMix64 rng(1234);
    std::array<std::int64_t, 10> counts{};
    const int draws = 1'000'000;
    for (int i = 0; i < draws; ++i) {
        ++counts[rng.below(10)];
    }
    const double expected = draws / 10.0;
    const double sigma = std::sqrt(draws * 0.1 * 0.9);
    for (std::int64_t c : counts) {
        CHECK(std::abs(static_cast<double>(c) - expected) < 5.0 * sigma);
    }
}
