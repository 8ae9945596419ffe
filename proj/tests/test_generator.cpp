#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "intsort/generator.hpp"
#include "intsort/verify.hpp"

#include "helpers.hpp"

using namespace intsort;
using testing::keys_of;

namespace {

InputSpec make_spec(int case_id, std::size_t n, std::uint64_t seed) {
    InputSpec spec;
    spec.case_id = case_id;
    spec.n = n;
    spec.seed = seed;
    return spec;
}

std::size_t adjacent_inversions(const RecordSeq& seq) {
    std::size_t inversions = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i - 1].key > seq[i].key) {
            ++inversions;
        }
    }
    return inversions;
}

}  // namespace

TEST_CASE("per-case range bound defaults") {
    CHECK(default_range_bound(1) == 1'000'000);
    CHECK(default_range_bound(2) == 1'000'000);
    CHECK(default_range_bound(3) == 1'000'000);
    CHECK(default_range_bound(4) == 10'000);
    CHECK(default_range_bound(5) == 100'000'000);
    CHECK(default_range_bound(6) == 1'000'000);
}

TEST_CASE("generate is deterministic") {
    const InputSpec spec = make_spec(1, 10'000, 31337);
    CHECK(generate(spec) == generate(spec));
}

TEST_CASE("every case respects bound, tag permutation, and size") {
    for (int case_id = 1; case_id <= 6; ++case_id) {
        for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{997}}) {
            const RecordSeq seq = generate(make_spec(case_id, n, 5 + case_id));
            REQUIRE(seq.size() == n);
            const Key bound = default_range_bound(case_id);
            std::vector<std::uint64_t> tags;
            for (const Record& r : seq) {
                CHECK(r.key <= bound);
                tags.push_back(r.tag);
            }
            std::sort(tags.begin(), tags.end());
            std::vector<std::uint64_t> expected(n);
            std::iota(expected.begin(), expected.end(), 0);
            CHECK(tags == expected);
        }
    }
}

TEST_CASE("case 2 is sorted") {
    CHECK(verify::is_sorted(generate(make_spec(2, 5000, 17))));
    CHECK(verify::is_sorted(generate(make_spec(2, 0, 17))));
}

TEST_CASE("case 2 holds the same key multiset as case 1") {
    auto k1 = keys_of(generate(make_spec(1, 2000, 55)));
    const auto k2 = keys_of(generate(make_spec(2, 2000, 55)));
    std::sort(k1.begin(), k1.end());
    CHECK(k1 == k2);
}

TEST_CASE("case 3 is nearly sorted: adjacent inversions bounded by 2 per swap") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL}) {
        for (std::size_t n : {std::size_t{10}, std::size_t{1000}, std::size_t{20'000}}) {
            const RecordSeq seq = generate(make_spec(3, n, seed));
            const auto swaps = static_cast<std::size_t>(0.05 * static_cast<double>(n));
            CHECK(adjacent_inversions(seq) <= 2 * swaps);
        }
    }
}

TEST_CASE("case 3 with sorted_fraction 1 is fully sorted") {
    InputSpec spec = make_spec(3, 3000, 4);
    spec.sorted_fraction = 1.0;
    CHECK(verify::is_sorted(generate(spec)));
}

TEST_CASE("case 6 layout: ceil(n/3) duplicates, the rest distinct") {
    InputSpec spec = make_spec(6, 9, 123);
    spec.range_bound = 100;
    spec.repeated_value = 50;
    const RecordSeq seq = generate(spec);
    REQUIRE(seq.size() == 9);

    std::map<Key, int> histogram;
    for (const Record& r : seq) {
        ++histogram[r.key];
    }
    CHECK(histogram[50] == 3);
    for (const auto& [key, count] : histogram) {
        if (key != 50) {
            CHECK(count == 1);
        }
    }
}

TEST_CASE("case 6 multiset property at larger sizes and default repeated value") {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3'001}}) {
        const InputSpec spec = make_spec(6, n, 77);
        const RecordSeq seq = generate(spec);
        const Key repeated = default_range_bound(6) / 2;
        std::map<Key, std::size_t> histogram;
        for (const Record& r : seq) {
            ++histogram[r.key];
        }
        CHECK(histogram[repeated] == (n + 2) / 3);
        for (const auto& [key, count] : histogram) {
            if (key != repeated) {
                CHECK(count == 1);
            }
        }
    }
}

TEST_CASE("case 6 feasibility check") {
    InputSpec spec = make_spec(6, 9, 1);
    spec.range_bound = 5;  // ceil(2*9/3) = 6 > 5
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);

    spec.range_bound = 6;  // 6 <= 6 works
    CHECK(generate(spec).size() == 9);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(generate(make_spec(0, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(generate(make_spec(7, 1, 1)), std::invalid_argument);

    InputSpec bad_fraction = make_spec(3, 10, 1);
    bad_fraction.sorted_fraction = 1.5;
    CHECK_THROWS_AS(generate(bad_fraction), std::invalid_argument);

    InputSpec bad_bound = make_spec(1, 10, 1);
    bad_bound.range_bound = (Key{1} << 40) + 1;
    CHECK_THROWS_AS(generate(bad_bound), std::invalid_argument);

    InputSpec bad_repeated = make_spec(6, 10, 1);
    bad_repeated.range_bound = 100;
    bad_repeated.repeated_value = 101;
    CHECK_THROWS_AS(generate(bad_repeated), std::invalid_argument);
}

TEST_CASE("different seeds give different case-1 sequences") {
    CHECK(generate(make_spec(1, 100, 1)) != generate(make_spec(1, 100, 2)));
}
