#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "intsort/bench.hpp"

namespace intsort {

enum class Metric { time, memory };

// Paper-style table: rows = input cases 1..6, column groups = algorithms,
// columns = sizes. Time in seconds with 2 decimals, memory in MB (10^6
// bytes) with 1 decimal, missing cells as "-". Pure formatting: the same
// results always render to byte-identical text.
// Throws std::invalid_argument on empty results.
std::string emit_table(const std::vector<BenchResult>& results, Metric metric);

// Header `algorithm,case,n,median_time_s,relative_spread,peak_bytes`, one
// row per result in (case, n, algorithm) order, LF line endings, decimal
// point, no thousands separators.
void emit_csv(const std::vector<BenchResult>& results, std::ostream& out);

// Inverse of emit_csv; throws std::runtime_error on a malformed file.
std::vector<BenchResult> parse_csv(std::istream& in);

// Plot data for the two time figures: group 1 = input cases 1-3, group 2 =
// cases 4-6. One block per (algorithm, case) series with columns n and
// median seconds; blocks separated by two blank lines, `#` header comments.
// Throws std::invalid_argument when group is not 1 or 2 or the group has no
// data.
void emit_plot_data(const std::vector<BenchResult>& results, int group,
                    std::ostream& out);

// gnuplot companion for emit_plot_data output; both axes logarithmic.
std::string emit_plot_script(const std::vector<BenchResult>& results, int group,
                             std::string_view data_filename);

// Least-squares fit of log(seconds) against log(n). slope ~ 1 means the
// measured time grows linearly with input size.
struct ScalingFit {
    AlgorithmId algorithm = AlgorithmId::bucket;
    int case_id = 0;  // 0 when the fit is not attached to a matrix cell
    double slope = 0.0;
    double r_squared = 0.0;
};

// points are (n, seconds) pairs. Throws std::invalid_argument on fewer than
// two points, fewer than two distinct n values, or a non-positive value.
ScalingFit fit_loglog_slope(std::span<const std::pair<double, double>> points);

// One fit per (algorithm, case) pair that has >= 2 distinct sizes.
std::vector<ScalingFit> compute_scaling_fits(const std::vector<BenchResult>& results);

// Human-readable slope table, or a notice when no pair has enough sizes.
std::string emit_scaling_report(const std::vector<BenchResult>& results);

}  // namespace intsort
