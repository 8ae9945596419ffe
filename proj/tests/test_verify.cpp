#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "intsort/generator.hpp"
#include "intsort/rng.hpp"
#include "intsort/sort.hpp"
#include "intsort/verify.hpp"

#include "helpers.hpp"

using namespace intsort;
using namespace intsort::verify;
using testing::seq_of;

TEST_CASE("oracle_sort on trivial inputs") {
    CHECK(oracle_sort(seq_of({})).empty());

    const RecordSeq twin = seq_of({5, 5});
    CHECK(oracle_sort(twin) == twin);  // equal keys keep order

    const RecordSeq out = oracle_sort(seq_of({3, 1, 2}));
    CHECK(out[0].key == 1);
    CHECK(out[1].key == 2);
    CHECK(out[2].key == 3);
}

TEST_CASE("oracle agrees with insertion sort on every sequence of length <= 6 over {0,1,2}") {
    for (std::size_t length = 0; length <= 6; ++length) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < length; ++i) {
            total *= 3;
        }
        for (std::size_t code = 0; code < total; ++code) {
            RecordSeq seq;
            std::size_t rest = code;
            for (std::size_t i = 0; i < length; ++i) {
                seq.push_back(Record{rest % 3, i});
                rest /= 3;
            }
            CHECK(oracle_sort(seq) == insertion_sort(seq));
        }
    }
}

TEST_CASE("oracle outputs satisfy the checkers on generated inputs") {
    SplitMix64 rng(2718);
    for (int round = 0; round < 200; ++round) {
        InputSpec spec;
        spec.case_id = static_cast<int>(1 + rng.below(6));
        spec.n = rng.below(400);
        spec.seed = rng.next();
        const RecordSeq in = generate(spec);
        const RecordSeq out = oracle_sort(in);
        CHECK(is_sorted(out));
        CHECK(is_permutation(in, out));
        CHECK(is_stable(in, out));
    }
}

TEST_CASE("is_sorted") {
    CHECK(is_sorted(seq_of({})));
    CHECK(is_sorted(seq_of({7})));
    CHECK(is_sorted(seq_of({1, 2, 2, 3})));
    CHECK_FALSE(is_sorted(seq_of({2, 1})));
}

TEST_CASE("is_permutation compares (key, tag) multisets") {
    RecordSeq a = seq_of({1, 2});
    RecordSeq b;
    b.push_back(Record{2, 1});
    b.push_back(Record{1, 0});
    CHECK(is_permutation(a, b));

    CHECK_FALSE(is_permutation(seq_of({1}), seq_of({1, 1})));

    // same keys, different tags: not a permutation of records
    RecordSeq c = seq_of({1, 2});
    RecordSeq d;
    d.push_back(Record{1, 5});
    d.push_back(Record{2, 6});
    CHECK_FALSE(is_permutation(c, d));

    CHECK(is_key_permutation(c, d));
    CHECK_FALSE(is_key_permutation(seq_of({1}), seq_of({2})));
}

TEST_CASE("is_stable distinguishes unstable from wrong") {
    RecordSeq in;
    in.push_back(Record{2, 'a'});
    in.push_back(Record{2, 'b'});

    RecordSeq kept = in;
    CHECK(is_stable(in, kept));

    RecordSeq swapped;
    swapped.push_back(Record{2, 'b'});
    swapped.push_back(Record{2, 'a'});
    CHECK_FALSE(is_stable(in, swapped));

    RecordSeq wrong;
    wrong.push_back(Record{2, 'a'});
    wrong.push_back(Record{3, 'b'});
    CHECK_THROWS_AS(is_stable(in, wrong), std::invalid_argument);
}

TEST_CASE("is_stable works on arbitrary tags, not just positions") {
    RecordSeq in;
    in.push_back(Record{1, 900});
    in.push_back(Record{1, 900});  // duplicate tags are fine
    in.push_back(Record{0, 7});

    RecordSeq out;
    out.push_back(Record{0, 7});
    out.push_back(Record{1, 900});
    out.push_back(Record{1, 900});
    CHECK(is_stable(in, out));
}
