#include "intsort/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace intsort {

namespace {

constexpr const char* kCsvHeader = "algorithm,case,n,median_time_s,relative_spread,peak_bytes";
constexpr int kCellWidth = 10;

// Tables and plots list algorithms in the traditional order of this kind of
// comparison: radix first, then bucket, then anything else.
int display_rank(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::radix:
            return 0;
        case AlgorithmId::bucket:
            return 1;
        case AlgorithmId::insertion:
            return 2;
    }
    return 3;
}

std::string_view display_name(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::radix:
            return "RADIX sort";
        case AlgorithmId::bucket:
            return "Bucket sort";
        case AlgorithmId::insertion:
            return "Insertion sort";
    }
    return "?";
}

std::vector<AlgorithmId> algorithms_in(const std::vector<BenchResult>& results) {
    std::vector<AlgorithmId> algorithms;
    for (const BenchResult& r : results) {
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end()) {
            algorithms.push_back(r.algorithm);
        }
    }
    std::sort(algorithms.begin(), algorithms.end(),
              [](AlgorithmId a, AlgorithmId b) { return display_rank(a) < display_rank(b); });
    return algorithms;
}

std::vector<std::size_t> sizes_in(const std::vector<BenchResult>& results) {
    std::set<std::size_t> sizes;
    for (const BenchResult& r : results) {
        sizes.insert(r.n);
    }
    return {sizes.begin(), sizes.end()};
}

std::string size_label(std::size_t n) {
    // Powers of ten render the way the tables are usually read.
    if (n >= 10) {
        std::size_t v = n;
        int exponent = 0;
        while (v % 10 == 0) {
            v /= 10;
            ++exponent;
        }
        if (v == 1) {
            return "n=10^" + std::to_string(exponent);
        }
    }
    return "n=" + std::to_string(n);
}

std::string format_double(const char* fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, value);
    return buf;
}

std::string pad_left(const std::string& s, int width) {
    return s.size() >= static_cast<std::size_t>(width)
               ? s
               : std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

std::vector<const BenchResult*> rows_sorted(const std::vector<BenchResult>& results) {
    std::vector<const BenchResult*> rows;
    rows.reserve(results.size());
    for (const BenchResult& r : results) {
        rows.push_back(&r);
    }
    std::sort(rows.begin(), rows.end(), [](const BenchResult* a, const BenchResult* b) {
        if (a->case_id != b->case_id) {
            return a->case_id < b->case_id;
        }
        if (a->n != b->n) {
            return a->n < b->n;
        }
        return display_rank(a->algorithm) < display_rank(b->algorithm);
    });
    return rows;
}

std::vector<int> group_cases(int group) {
    if (group == 1) {
        return {1, 2, 3};
    }
    if (group == 2) {
        return {4, 5, 6};
    }
    throw std::invalid_argument("plot group must be 1 or 2, got " + std::to_string(group));
}

struct Series {
    AlgorithmId algorithm;
    int case_id;
    std::vector<std::pair<std::size_t, double>> points;  // (n, median seconds)
};

std::vector<Series> plot_series(const std::vector<BenchResult>& results, int group) {
    const std::vector<int> cases = group_cases(group);
    std::vector<Series> series;
    for (AlgorithmId algorithm : algorithms_in(results)) {
        for (int case_id : cases) {
            Series s{algorithm, case_id, {}};
            for (const BenchResult& r : results) {
                if (r.algorithm == algorithm && r.case_id == case_id) {
                    s.points.emplace_back(r.n, r.median_time_s);
                }
            }
            if (!s.points.empty()) {
                std::sort(s.points.begin(), s.points.end());
                series.push_back(std::move(s));
            }
        }
    }
    if (series.empty()) {
        throw std::invalid_argument("no data for plot group " + std::to_string(group));
    }
    return series;
}

}  // namespace

std::string emit_table(const std::vector<BenchResult>& results, Metric metric) {
    if (results.empty()) {
        throw std::invalid_argument("emit_table: no results");
    }
    const std::vector<AlgorithmId> algorithms = algorithms_in(results);
    const std::vector<std::size_t> sizes = sizes_in(results);

    std::map<std::tuple<int, int, std::size_t>, std::string> cells;
    for (const BenchResult& r : results) {
        std::string text = metric == Metric::time
                               ? format_double("%.2f", r.median_time_s)
                               : format_double("%.1f", static_cast<double>(r.peak_bytes) / 1e6);
        cells[{display_rank(r.algorithm), r.case_id, r.n}] = std::move(text);
    }

    std::ostringstream out;
    out << (metric == Metric::time ? "Measured time consumptions [s]"
                                   : "Measured memory usage [MB]")
        << "\n\n";

    const std::string row_label = "Input no.";
    const int group_width = kCellWidth * static_cast<int>(sizes.size());

    out << std::string(row_label.size(), ' ');
    for (AlgorithmId algorithm : algorithms) {
        const std::string name(display_name(algorithm));
        const int padding = std::max(0, group_width - static_cast<int>(name.size()));
        const int left = padding / 2;
        out << std::string(static_cast<std::size_t>(left), ' ') << name
            << std::string(static_cast<std::size_t>(padding - left), ' ');
    }
    out << "\n" << row_label;
    for (std::size_t g = 0; g < algorithms.size(); ++g) {
        for (std::size_t n : sizes) {
            out << pad_left(size_label(n), kCellWidth);
        }
    }
    out << "\n";

    for (int case_id = 1; case_id <= 6; ++case_id) {
        out << case_id << std::string(row_label.size() - 1, ' ');
        for (AlgorithmId algorithm : algorithms) {
            for (std::size_t n : sizes) {
                const auto it = cells.find({display_rank(algorithm), case_id, n});
                out << pad_left(it == cells.end() ? "-" : it->second, kCellWidth);
            }
        }
        out << "\n";
    }
    return out.str();
}

void emit_csv(const std::vector<BenchResult>& results, std::ostream& out) {
    out << kCsvHeader << "\n";
    for (const BenchResult* r : rows_sorted(results)) {
        out << algorithm_name(r->algorithm) << ',' << r->case_id << ',' << r->n << ','
            << format_double("%.9g", r->median_time_s) << ','
            << format_double("%.9g", r->relative_spread) << ',' << r->peak_bytes << "\n";
    }
}

std::vector<BenchResult> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("CSV is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCsvHeader) {
        throw std::runtime_error("CSV header mismatch, expected: " + std::string(kCsvHeader));
    }
    std::vector<BenchResult> results;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 6) {
            throw std::runtime_error("CSV line " + std::to_string(line_no) +
                                     ": expected 6 fields, got " +
                                     std::to_string(fields.size()));
        }
        const auto algorithm = parse_algorithm(fields[0]);
        if (!algorithm) {
            throw std::runtime_error("CSV line " + std::to_string(line_no) +
                                     ": unknown algorithm '" + fields[0] + "'");
        }
        try {
            BenchResult r;
            r.algorithm = *algorithm;
            r.case_id = std::stoi(fields[1]);
            r.n = static_cast<std::size_t>(std::stoull(fields[2]));
            r.median_time_s = std::stod(fields[3]);
            r.relative_spread = std::stod(fields[4]);
            r.peak_bytes = std::stoull(fields[5]);
            results.push_back(r);
        } catch (const std::exception&) {
            throw std::runtime_error("CSV line " + std::to_string(line_no) +
                                     ": malformed numeric field");
        }
    }
    return results;
}

void emit_plot_data(const std::vector<BenchResult>& results, int group, std::ostream& out) {
    const std::vector<Series> series = plot_series(results, group);
    out << "# median sort time vs input size, plot group " << group << " (input cases "
        << (group == 1 ? "1-3" : "4-6") << ")\n";
    out << "# one block per series, usable as gnuplot index 0.."
        << series.size() - 1 << "\n";
    bool first = true;
    for (const Series& s : series) {
        if (!first) {
            out << "\n\n";
        }
        first = false;
        out << "# series: " << algorithm_name(s.algorithm) << " case " << s.case_id << "\n";
        out << "# n  median_time_s\n";
        for (const auto& [n, seconds] : s.points) {
            out << n << ' ' << format_double("%.9g", seconds) << "\n";
        }
    }
}

std::string emit_plot_script(const std::vector<BenchResult>& results, int group,
                             std::string_view data_filename) {
    const std::vector<Series> series = plot_series(results, group);
    std::ostringstream out;
    out << "# gnuplot script, time consumption for inputs "
        << (group == 1 ? "1, 2 and 3" : "4, 5 and 6") << "\n";
    out << "set logscale xy\n";
    out << "set xlabel 'n'\n";
    out << "set ylabel 'median time [s]'\n";
    out << "set key top left\n";
    out << "plot \\\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << "  '" << data_filename << "' index " << i
            << " using 1:2 with linespoints title '"
            << algorithm_name(series[i].algorithm) << " case " << series[i].case_id << "'";
        out << (i + 1 < series.size() ? ", \\\n" : "\n");
    }
    return out.str();
}

ScalingFit fit_loglog_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) {
        throw std::invalid_argument("fit_loglog_slope: need at least 2 points");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [n, seconds] : points) {
        if (n <= 0.0 || seconds <= 0.0) {
            throw std::invalid_argument("fit_loglog_slope: points must be positive");
        }
        xs.push_back(std::log(n));
        ys.push_back(std::log(seconds));
    }
    const auto mean = [](const std::vector<double>& v) {
        double sum = 0.0;
        for (double x : v) {
            sum += x;
        }
        return sum / static_cast<double>(v.size());
    };
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("fit_loglog_slope: need at least 2 distinct n values");
    }
    ScalingFit fit;
    fit.slope = sxy / sxx;
    // syy == 0 means a constant was fitted exactly.
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

std::vector<ScalingFit> compute_scaling_fits(const std::vector<BenchResult>& results) {
    std::map<std::pair<int, int>, std::pair<AlgorithmId, std::vector<std::pair<double, double>>>>
        groups;
    for (const BenchResult& r : results) {
        auto& group = groups[{display_rank(r.algorithm), r.case_id}];
        group.first = r.algorithm;
        group.second.emplace_back(static_cast<double>(r.n), r.median_time_s);
    }
    std::vector<ScalingFit> fits;
    for (auto& [key, group] : groups) {
        auto& points = group.second;
        std::sort(points.begin(), points.end());
        std::size_t distinct = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i == 0 || points[i].first != points[i - 1].first) {
                ++distinct;
            }
        }
        if (distinct < 2) {
            continue;
        }
        bool positive = true;
        for (const auto& [n, seconds] : points) {
            if (n <= 0.0 || seconds <= 0.0) {
                positive = false;
            }
        }
        if (!positive) {
            continue;
        }
        ScalingFit fit = fit_loglog_slope(points);
        fit.algorithm = group.first;
        fit.case_id = key.second;
        fits.push_back(fit);
    }
    return fits;
}

std::string emit_scaling_report(const std::vector<BenchResult>& results) {
    const std::vector<ScalingFit> fits = compute_scaling_fits(results);
    std::ostringstream out;
    if (fits.empty()) {
        out << "scaling analysis omitted: need at least two distinct sizes per "
               "(algorithm, case) pair\n";
        return out.str();
    }
    out << "Scaling of median time vs n (log-log least squares; slope 1 = linear)\n\n";
    out << "algorithm   case     slope       r^2\n";
    for (const ScalingFit& fit : fits) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%-11s %4d %9.3f %9.4f\n",
                      std::string(algorithm_name(fit.algorithm)).c_str(), fit.case_id,
                      fit.slope, fit.r_squared);
        out << buf;
    }
    return out.str();
}

}  // namespace intsort
