#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lei2json {

enum class BenchFunction { BuildTemplate, ParseToJson, Validate };

const char* bench_function_name(BenchFunction f);  // "buildTemplate", ...

/// Timing samples for one (function, size) point. mean/stddev are over the
/// recorded runs; stddev uses the population (n) divisor.
struct BenchResult {
    BenchFunction function = BenchFunction::BuildTemplate;
    std::size_t size = 0;        // property count or event count
    std::vector<double> runs_ms;
    double mean_ms = 0.0;
    double stddev_ms = 0.0;
};

/// Deterministic synthetic inputs: a flat event schema with `schema_size`
/// leaves of mixed types and a CSV of `event_count` valid rows. The same
/// seed always yields byte-identical outputs.
struct SyntheticData {
    std::string schema_json;
    std::string csv;
};

SyntheticData generate_synthetic(std::size_t schema_size, std::size_t event_count,
                                 std::uint64_t seed);

struct BenchPlan {
    std::vector<BenchFunction> functions;
    std::map<BenchFunction, std::vector<std::size_t>> sizes;
    int runs = 10;
    std::uint64_t seed = 42;
};

/// Defaults matching the evaluation sweeps: buildTemplate over properties
/// {5,10,15,20,25}; parseToJSON and validate over events {1000..10000 step
/// 1000} with 8 columns.
std::vector<std::size_t> default_sizes(BenchFunction f);

/// Wall-clock timing on a monotonic clock, single-threaded. One warm-up run
/// per point is executed and excluded. Sub-millisecond workloads are batched
/// (the op is repeated within one sample and the per-op time recorded) so a
/// sample stays above timer noise.
std::vector<BenchResult> run_bench(const BenchPlan& plan);

/// Raw samples plus summary rows, columns: function,size,run,ms
/// (run is a 1-based index, then "mean" and "stddev" rows per point).
std::string report_csv(const std::vector<BenchResult>& results);

double mean_of(const std::vector<double>& xs);
double population_stddev(const std::vector<double>& xs);

/// R^2 of the least-squares line through (size, mean) points.
double linear_fit_r2(const std::vector<double>& xs, const std::vector<double>& ys);

/// Number of adjacent mean inversions (mean decreasing as size grows).
int count_mean_inversions(const std::vector<double>& means);

}  // namespace lei2json
