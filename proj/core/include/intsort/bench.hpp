#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intsort/record.hpp"

namespace intsort {

enum class AlgorithmId { bucket, radix, insertion };

std::string_view algorithm_name(AlgorithmId id);
std::optional<AlgorithmId> parse_algorithm(std::string_view name);

// One (algorithm x case x size) matrix. Desk-scale defaults keep the full
// matrix in the minutes range; kPaperScaleSizes (10^6..10^8) is the ladder
// for full-scale runs.
struct BenchConfig {
    std::vector<AlgorithmId> algorithms{AlgorithmId::bucket, AlgorithmId::radix};
    std::vector<int> cases{1, 2, 3, 4, 5, 6};
    std::vector<std::size_t> sizes{10'000, 100'000, 1'000'000};
    int repeats = 5;  // >= 3 so a median exists and spread is meaningful
    std::uint64_t radix_base = 10;
    std::uint64_t seed = 1;
};

inline constexpr std::size_t kPaperScaleSizes[3] = {1'000'000, 10'000'000, 100'000'000};

struct BenchResult {
    AlgorithmId algorithm = AlgorithmId::bucket;
    int case_id = 0;
    std::size_t n = 0;
    double median_time_s = 0.0;
    double relative_spread = 0.0;  // (max - min) / median over the repeats
    std::uint64_t peak_bytes = 0;  // auxiliary allocation high-water mark
};

// A sort under measurement: input untouched, sorted copy returned.
using SortFn = std::function<RecordSeq(const RecordSeq&)>;

// Binds an algorithm id to a callable the harness can run. range_bound is
// the inclusive key bound bucket_sort partitions against; radix_base feeds
// radix_sort_lsd; insertion ignores both.
SortFn make_sort_fn(AlgorithmId id, Key range_bound, std::uint64_t radix_base);

struct TimingStats {
    double median_s = 0.0;
    double relative_spread = 0.0;
};

// One untimed warm-up run, then `repeats` timed runs on fresh copies of the
// input. Copying and the sortedness check sit outside the timed region; a
// run that produces an unsorted output rejects the whole measurement
// (std::runtime_error). Throws std::invalid_argument when repeats < 3.
TimingStats time_sort(const SortFn& sort, const RecordSeq& input, int repeats);

// Auxiliary allocation high-water mark of one run: buckets, counting
// arrays, output buffers -- everything the sort allocates, excluding the
// input sequence itself. Resets the process-global meter; callers must not
// run sorts concurrently with this.
std::uint64_t measure_peak_memory(const SortFn& sort, const RecordSeq& input);

struct CellError {
    AlgorithmId algorithm = AlgorithmId::bucket;
    int case_id = 0;
    std::size_t n = 0;
    std::string message;
};

// Generates each (case, n) input once, runs every selected algorithm on it,
// and collects one BenchResult per cell, ordered (case, n, algorithm).
// Strictly serialized, one sort at a time. With errors == nullptr a failing
// cell throws std::runtime_error with the (algorithm, case, n) coordinate in
// the message; otherwise failures are appended to *errors and the remaining
// cells still run.
std::vector<BenchResult> run_matrix(const BenchConfig& config,
                                    std::vector<CellError>* errors = nullptr);

}  // namespace intsort
