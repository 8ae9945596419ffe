// Command-line harness: generate benchmark inputs, sort sequence files,
// verify sort outputs, run the timing/memory matrix, render reports.
//
// Exit codes: 0 success, 1 contract or verification failure, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intsort/bench.hpp"
#include "intsort/generator.hpp"
#include "intsort/report.hpp"
#include "intsort/sequence_io.hpp"
#include "intsort/sort.hpp"
#include "intsort/verify.hpp"

namespace {

constexpr std::uint64_t kBuiltinDefaultSeed = 1;

// Flag beats INTSORT_SEED beats the built-in default.
std::uint64_t resolve_seed(bool flag_given, std::uint64_t flag_value) {
    if (flag_given) {
        return flag_value;
    }
    const char* env = std::getenv("INTSORT_SEED");
    if (env == nullptr || *env == '\0') {
        return kBuiltinDefaultSeed;
    }
    try {
        std::size_t consumed = 0;
        const std::uint64_t value = std::stoull(env, &consumed, 10);
        if (consumed != std::string(env).size()) {
            throw std::invalid_argument("trailing characters");
        }
        return value;
    } catch (const std::exception&) {
        throw CLI::ValidationError("INTSORT_SEED",
                                   "must be an unsigned 64-bit integer, got '" +
                                       std::string(env) + "'");
    }
}

struct GenerateArgs {
    int case_id = 1;
    std::size_t n = 0;
    std::uint64_t range_bound = 0;
    bool range_bound_given = false;
    std::uint64_t seed = kBuiltinDefaultSeed;
    bool seed_given = false;
    std::uint64_t repeated_value = 0;
    bool repeated_value_given = false;
    double sorted_fraction = 0.95;
    std::string out_path;
};

int cmd_generate(const GenerateArgs& args) {
    intsort::InputSpec spec;
    spec.case_id = args.case_id;
    spec.n = args.n;
    if (args.range_bound_given) {
        spec.range_bound = args.range_bound;
    }
    spec.seed = resolve_seed(args.seed_given, args.seed);
    if (args.repeated_value_given) {
        spec.repeated_value = args.repeated_value;
    }
    spec.sorted_fraction = args.sorted_fraction;

    const intsort::InputSpec resolved = spec.resolved();
    const intsort::RecordSeq records = intsort::generate(resolved);
    intsort::SequenceHeader header;
    header.case_id = static_cast<std::uint64_t>(resolved.case_id);
    header.n = records.size();
    header.range_bound = *resolved.range_bound;
    header.seed = resolved.seed;
    intsort::write_sequence_file(header, records, args.out_path);

    std::cout << "generated case=" << resolved.case_id << " n=" << records.size()
              << " M=" << *resolved.range_bound << " seed=" << resolved.seed << " -> "
              << args.out_path << "\n";
    return 0;
}

struct SortArgs {
    std::string in_path;
    std::string algorithm;
    std::uint64_t base = 10;
    std::string out_path;
};

int cmd_sort(const SortArgs& args) {
    const intsort::SequenceFile file = intsort::read_sequence_file(args.in_path);
    const auto algorithm = intsort::parse_algorithm(args.algorithm);
    if (!algorithm) {
        // unreachable behind the flag validator, kept for direct calls
        std::cerr << "error: unknown algorithm '" << args.algorithm << "'\n";
        return 2;
    }
    const intsort::SortFn sort =
        intsort::make_sort_fn(*algorithm, file.header.range_bound, args.base);

    const auto t0 = std::chrono::steady_clock::now();
    const intsort::RecordSeq sorted = sort(file.records);
    const auto t1 = std::chrono::steady_clock::now();
    const double elapsed = std::chrono::duration<double>(t1 - t0).count();

    intsort::write_sequence_file(file.header, sorted, args.out_path);
    std::cout << "sorted " << sorted.size() << " records with " << args.algorithm << " in "
              << elapsed << " s -> " << args.out_path << "\n";
    return 0;
}

struct VerifyArgs {
    std::string original_path;
    std::string sorted_path;
};

int cmd_verify(const VerifyArgs& args) {
    const intsort::SequenceFile original = intsort::read_sequence_file(args.original_path);
    const intsort::SequenceFile sorted = intsort::read_sequence_file(args.sorted_path);

    if (!intsort::verify::is_sorted(sorted.records)) {
        std::cout << "FAIL: not sorted\n";
        return 1;
    }
    std::cout << "sorted: yes\n";
    if (!intsort::verify::is_key_permutation(original.records, sorted.records)) {
        std::cout << "FAIL: not a permutation\n";
        return 1;
    }
    std::cout << "permutation: yes\n";
    std::cout << "stability: n/a (files store no payload tags; informational only)\n";
    std::cout << "OK\n";
    return 0;
}

struct BenchArgs {
    std::vector<std::string> algorithms{"bucket", "radix"};
    std::vector<int> cases{1, 2, 3, 4, 5, 6};
    std::vector<std::size_t> sizes{10'000, 100'000, 1'000'000};
    bool paper_scale = false;
    int repeats = 5;
    std::uint64_t base = 10;
    std::uint64_t seed = kBuiltinDefaultSeed;
    bool seed_given = false;
    std::string csv_path = "bench.csv";
    bool print_table = false;
    std::string plots_prefix;
};

int write_plot_files(const std::vector<intsort::BenchResult>& results,
                     const std::string& prefix) {
    for (int group : {1, 2}) {
        const std::string data_path = prefix + "_group" + std::to_string(group) + ".dat";
        const std::string script_path = prefix + "_group" + std::to_string(group) + ".gp";
        try {
            std::ofstream data(data_path);
            if (!data) {
                throw std::runtime_error("cannot open " + data_path + " for writing");
            }
            intsort::emit_plot_data(results, group, data);
            std::ofstream script(script_path);
            if (!script) {
                throw std::runtime_error("cannot open " + script_path + " for writing");
            }
            script << intsort::emit_plot_script(
                results, group, std::filesystem::path(data_path).filename().string());
            std::cout << "wrote " << data_path << " and " << script_path << "\n";
        } catch (const std::invalid_argument&) {
            std::cout << "plot group " << group << " skipped: no data for its cases\n";
        }
    }
    return 0;
}

void render_reports(const std::vector<intsort::BenchResult>& results, bool print_table,
                    const std::string& plots_prefix) {
    if (print_table && !results.empty()) {
        std::cout << "\n" << intsort::emit_table(results, intsort::Metric::time);
        std::cout << "\n" << intsort::emit_table(results, intsort::Metric::memory);
    }
    std::cout << "\n" << intsort::emit_scaling_report(results);
    if (!plots_prefix.empty() && !results.empty()) {
        write_plot_files(results, plots_prefix);
    }
}

int cmd_bench(const BenchArgs& args) {
    intsort::BenchConfig config;
    config.algorithms.clear();
    for (const std::string& name : args.algorithms) {
        config.algorithms.push_back(*intsort::parse_algorithm(name));
    }
    config.cases = args.cases;
    config.sizes = args.sizes;
    if (args.paper_scale) {
        config.sizes.assign(std::begin(intsort::kPaperScaleSizes),
                            std::end(intsort::kPaperScaleSizes));
    }
    config.repeats = args.repeats;
    config.radix_base = args.base;
    config.seed = resolve_seed(args.seed_given, args.seed);

    std::cout << "running matrix: " << config.algorithms.size() << " algorithms x "
              << config.cases.size() << " cases x " << config.sizes.size()
              << " sizes, repeats=" << config.repeats << ", seed=" << config.seed << "\n";

    std::vector<intsort::CellError> errors;
    const std::vector<intsort::BenchResult> results = intsort::run_matrix(config, &errors);

    {
        std::ofstream csv(args.csv_path);
        if (!csv) {
            std::cerr << "error: cannot open " << args.csv_path << " for writing\n";
            return 1;
        }
        intsort::emit_csv(results, csv);
    }
    std::cout << "wrote " << results.size() << " rows to " << args.csv_path << "\n";

    if (!results.empty()) {
        render_reports(results, args.print_table, args.plots_prefix);
    }

    if (!errors.empty()) {
        for (const intsort::CellError& e : errors) {
            std::cerr << "error: (" << intsort::algorithm_name(e.algorithm) << ", case "
                      << e.case_id << ", n=" << e.n << ") " << e.message << "\n";
        }
        std::cerr << errors.size() << " matrix cell(s) failed; CSV contains the "
                  << results.size() << " completed rows\n";
        return 1;
    }
    return 0;
}

struct ReportArgs {
    std::string csv_path;
    bool print_table = false;
    std::string plots_prefix;
};

int cmd_report(const ReportArgs& args) {
    std::ifstream csv(args.csv_path);
    if (!csv) {
        std::cerr << "error: cannot open " << args.csv_path << "\n";
        return 1;
    }
    const std::vector<intsort::BenchResult> results = intsort::parse_csv(csv);
    if (results.empty()) {
        std::cerr << "error: " << args.csv_path << " contains no result rows\n";
        return 1;
    }
    // The whole point of `report` is re-rendering, so tables default on.
    render_reports(results, true, args.plots_prefix);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bucket sort vs LSD radix sort: input generation, sorting, "
                 "verification and benchmarking over sequence files"};
    app.require_subcommand(1);

    const std::vector<std::string> algorithm_names{"bucket", "radix", "insertion"};

    GenerateArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("generate", "generate a benchmark input file");
    gen_cmd->add_option("--case", gen.case_id, "input case 1..6")
        ->required()
        ->check(CLI::Range(1, 6));
    gen_cmd->add_option("--n", gen.n, "number of records")->required();
    auto* gen_m = gen_cmd->add_option("--M", gen.range_bound,
                                      "inclusive key range bound (per-case default)");
    auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "RNG seed (default 1)");
    auto* gen_rep = gen_cmd->add_option("--repeated-value", gen.repeated_value,
                                        "case 6 repeated key (default M/2)");
    gen_cmd->add_option("--sorted-fraction", gen.sorted_fraction,
                        "case 3 sorted fraction (default 0.95)")
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--out", gen.out_path, "output sequence file")->required();

    SortArgs sort_args;
    CLI::App* sort_cmd = app.add_subcommand("sort", "sort a sequence file");
    sort_cmd->add_option("--in", sort_args.in_path, "input sequence file")->required();
    sort_cmd->add_option("--algorithm", sort_args.algorithm, "bucket | radix | insertion")
        ->required()
        ->check(CLI::IsMember(algorithm_names));
    sort_cmd->add_option("--base", sort_args.base, "radix base (default 10)")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
    sort_cmd->add_option("--out", sort_args.out_path, "output sequence file")->required();

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check a sorted file against its original");
    verify_cmd->add_option("--original", verify_args.original_path, "pre-sort file")
        ->required();
    verify_cmd->add_option("--sorted", verify_args.sorted_path, "post-sort file")->required();

    BenchArgs bench_args;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "run the (algorithm x case x size) matrix");
    bench_cmd->add_option("--algorithms", bench_args.algorithms,
                          "comma-separated subset of bucket,radix,insertion "
                          "(default bucket,radix)")
        ->delimiter(',')
        ->check(CLI::IsMember(algorithm_names));
    bench_cmd->add_option("--cases", bench_args.cases, "input cases (default 1..6)")
        ->delimiter(',')
        ->check(CLI::Range(1, 6));
    auto* bench_sizes =
        bench_cmd->add_option("--sizes", bench_args.sizes,
                              "input sizes (default 10000,100000,1000000)")
            ->delimiter(',');
    bench_cmd->add_flag("--paper-scale", bench_args.paper_scale,
                        "use sizes 10^6,10^7,10^8")
        ->excludes(bench_sizes);
    bench_cmd->add_option("--repeats", bench_args.repeats, "timed runs per cell (default 5)")
        ->check(CLI::Range(3, 1'000'000));
    bench_cmd->add_option("--base", bench_args.base, "radix base (default 10)")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
    auto* bench_seed = bench_cmd->add_option("--seed", bench_args.seed, "RNG seed (default 1)");
    bench_cmd->add_option("--csv", bench_args.csv_path, "CSV output path (default bench.csv)");
    bench_cmd->add_flag("--table", bench_args.print_table, "print paper-style tables");
    bench_cmd->add_option("--plots", bench_args.plots_prefix,
                          "write <prefix>_group{1,2}.dat/.gp plot data");

    ReportArgs report_args;
    CLI::App* report_cmd =
        app.add_subcommand("report", "re-render tables/plots from an existing CSV");
    report_cmd->add_option("--csv", report_args.csv_path, "CSV produced by bench")->required();
    report_cmd->add_flag("--table", report_args.print_table,
                         "print paper-style tables (default on)");
    report_cmd->add_option("--plots", report_args.plots_prefix,
                           "write <prefix>_group{1,2}.dat/.gp plot data");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        gen.seed_given = gen_seed->count() > 0;
        gen.range_bound_given = gen_m->count() > 0;
        gen.repeated_value_given = gen_rep->count() > 0;
        bench_args.seed_given = bench_seed->count() > 0;

        if (gen_cmd->parsed()) {
            return cmd_generate(gen);
        }
        if (sort_cmd->parsed()) {
            return cmd_sort(sort_args);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify_args);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(bench_args);
        }
        if (report_cmd->parsed()) {
            return cmd_report(report_args);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
