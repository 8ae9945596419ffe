#include "intsort/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "intsort/alloc_meter.hpp"
#include "intsort/generator.hpp"
#include "intsort/sort.hpp"
#include "intsort/verify.hpp"

namespace intsort {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_between(Clock::time_point t0, Clock::time_point t1) {
    return std::chrono::duration<double>(t1 - t0).count();
}

std::string cell_prefix(AlgorithmId algorithm, int case_id, std::size_t n) {
    return "(" + std::string(algorithm_name(algorithm)) + ", case " +
           std::to_string(case_id) + ", n=" + std::to_string(n) + ")";
}

}  // namespace

std::string_view algorithm_name(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::bucket:
            return "bucket";
        case AlgorithmId::radix:
            return "radix";
        case AlgorithmId::insertion:
            return "insertion";
    }
    return "unknown";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) {
    if (name == "bucket") {
        return AlgorithmId::bucket;
    }
    if (name == "radix") {
        return AlgorithmId::radix;
    }
    if (name == "insertion") {
        return AlgorithmId::insertion;
    }
    return std::nullopt;
}

SortFn make_sort_fn(AlgorithmId id, Key range_bound, std::uint64_t radix_base) {
    switch (id) {
        case AlgorithmId::bucket:
            return [range_bound](const RecordSeq& seq) { return bucket_sort(seq, range_bound); };
        case AlgorithmId::radix:
            return [radix_base](const RecordSeq& seq) { return radix_sort_lsd(seq, radix_base); };
        case AlgorithmId::insertion:
            return [](const RecordSeq& seq) { return insertion_sort(seq); };
    }
    throw std::invalid_argument("make_sort_fn: unknown algorithm");
}

TimingStats time_sort(const SortFn& sort, const RecordSeq& input, int repeats) {
    if (repeats < 3) {
        throw std::invalid_argument("time_sort: repeats must be >= 3, got " +
                                    std::to_string(repeats));
    }

    // Untimed warm-up excludes first-touch page faults and cold caches.
    if (!verify::is_sorted(sort(input))) {
        throw std::runtime_error("time_sort: warm-up run produced unsorted output");
    }

    std::vector<double> durations;
    durations.reserve(static_cast<std::size_t>(repeats));
    for (int run = 0; run < repeats; ++run) {
        RecordSeq copy = input;  // outside the timed region
        const auto t0 = Clock::now();
        RecordSeq out = sort(copy);
        const auto t1 = Clock::now();
        if (!verify::is_sorted(out)) {
            throw std::runtime_error("time_sort: run " + std::to_string(run) +
                                     " produced unsorted output, measurement rejected");
        }
        durations.push_back(seconds_between(t0, t1));
    }

    std::sort(durations.begin(), durations.end());
    const std::size_t count = durations.size();
    const double median = count % 2 == 1
                              ? durations[count / 2]
                              : 0.5 * (durations[count / 2 - 1] + durations[count / 2]);
    const double span = durations.back() - durations.front();
    return TimingStats{median, median > 0.0 ? span / median : 0.0};
}

std::uint64_t measure_peak_memory(const SortFn& sort, const RecordSeq& input) {
    alloc_meter::reset();
    RecordSeq out = sort(input);
    const std::int64_t peak = alloc_meter::peak_bytes();
    return peak > 0 ? static_cast<std::uint64_t>(peak) : 0;
}

std::vector<BenchResult> run_matrix(const BenchConfig& config,
                                    std::vector<CellError>* errors) {
    if (config.repeats < 3) {
        throw std::invalid_argument("run_matrix: repeats must be >= 3");
    }

    std::vector<int> cases = config.cases;
    std::vector<std::size_t> sizes = config.sizes;
    std::sort(cases.begin(), cases.end());
    std::sort(sizes.begin(), sizes.end());

    std::vector<BenchResult> results;
    results.reserve(cases.size() * sizes.size() * config.algorithms.size());

    for (int case_id : cases) {
        for (std::size_t n : sizes) {
            RecordSeq input;
            Key range_bound = 0;
            try {
                InputSpec spec;
                spec.case_id = case_id;
                spec.n = n;
                spec.seed = config.seed;
                input = generate(spec);
                range_bound = default_range_bound(case_id);
            } catch (const std::exception& e) {
                for (AlgorithmId algorithm : config.algorithms) {
                    if (errors != nullptr) {
                        errors->push_back(CellError{algorithm, case_id, n, e.what()});
                    } else {
                        throw std::runtime_error(cell_prefix(algorithm, case_id, n) +
                                                 " generation failed: " + e.what());
                    }
                }
                continue;
            }

            for (AlgorithmId algorithm : config.algorithms) {
                try {
                    const SortFn sort = make_sort_fn(algorithm, range_bound, config.radix_base);
                    const TimingStats stats = time_sort(sort, input, config.repeats);
                    const std::uint64_t peak = measure_peak_memory(sort, input);
                    results.push_back(BenchResult{algorithm, case_id, n, stats.median_s,
                                                  stats.relative_spread, peak});
                } catch (const std::exception& e) {
                    if (errors != nullptr) {
                        errors->push_back(CellError{algorithm, case_id, n, e.what()});
                    } else {
                        throw std::runtime_error(cell_prefix(algorithm, case_id, n) + " " +
                                                 e.what());
                    }
                }
            }
        }
    }
    return results;
}

}  // namespace intsort
