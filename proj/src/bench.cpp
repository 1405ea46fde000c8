#include "lei2json/bench.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "lei2json/csv.hpp"
#include "lei2json/json_generator.hpp"
#include "lei2json/ojson.hpp"
#include "lei2json/schema_model.hpp"
#include "lei2json/schema_validator.hpp"
#include "lei2json/template_io.hpp"

namespace lei2json {

const char* bench_function_name(BenchFunction f) {
    switch (f) {
        case BenchFunction::BuildTemplate: return "buildTemplate";
        case BenchFunction::ParseToJson: return "parseToJSON";
        case BenchFunction::Validate: return "validate";
    }
    return "unknown";
}

std::vector<std::size_t> default_sizes(BenchFunction f) {
    if (f == BenchFunction::BuildTemplate) return {5, 10, 15, 20, 25};
    std::vector<std::size_t> sizes;
    for (std::size_t n = 1000; n <= 10000; n += 1000) sizes.push_back(n);
    return sizes;
}

namespace {

// Column type cycle used by the synthetic schema. Mixing scalar kinds with a
// date format and an enum keeps every coercion path on the hot loop.
enum class SynthKind { Plain, Number, Integer, Boolean, Date, Enum };

constexpr SynthKind kCycle[] = {SynthKind::Plain,   SynthKind::Number, SynthKind::Integer,
                                SynthKind::Boolean, SynthKind::Date,   SynthKind::Enum};
constexpr const char* kEnumChoices[] = {"alpha", "beta", "gamma"};

std::string field_name(std::size_t i) {
    std::string n = std::to_string(i + 1);
    return "field" + std::string(n.size() < 2 ? 2 - n.size() : 0, '0') + n;
}

std::string pad2(std::uint64_t v) {
    return (v < 10 ? "0" : "") + std::to_string(v);
}

// Raw engine output only; the std <random> distributions are implementation
// defined and would break byte-for-byte determinism across toolchains.
std::string cell_for(SynthKind kind, std::mt19937_64& rng) {
    switch (kind) {
        case SynthKind::Plain: return "s" + std::to_string(rng() % 100000);
        case SynthKind::Number:
            return std::to_string(rng() % 1000) + "." + std::to_string(rng() % 10);
        case SynthKind::Integer: return std::to_string(rng() % 100000);
        case SynthKind::Boolean: return rng() % 2 ? "true" : "false";
        case SynthKind::Date:
            return std::to_string(2000 + rng() % 30) + "-" + pad2(1 + rng() % 12) + "-" +
                   pad2(1 + rng() % 28);
        case SynthKind::Enum: return kEnumChoices[rng() % 3];
    }
    return {};
}

struct TimedOp {
    // Returns an opaque size so the optimizer cannot drop the work.
    std::function<std::size_t()> run;
};

volatile std::size_t g_sink = 0;

// Busy work that settles a frequency-scaling CPU on its working clock before
// the first measurement, so early sweep points are not penalized.
void settle_clock() {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    std::mt19937_64 rng(0x5e771e);
    std::size_t acc = 0;
    while (clock::now() - start < std::chrono::milliseconds(300)) {
        for (int i = 0; i < 4096; ++i) acc += rng();
    }
    g_sink = g_sink + acc;
}

double sample_ms(const TimedOp& op, std::size_t batch) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    std::size_t acc = 0;
    for (std::size_t i = 0; i < batch; ++i) acc += op.run();
    g_sink = g_sink + acc;
    std::chrono::duration<double, std::milli> elapsed = clock::now() - start;
    return elapsed.count() / static_cast<double>(batch);
}

// One cold run is excluded, then a warmed run sizes the batch so every
// sample spans at least kTargetMs. Long samples keep timer jitter and
// scheduler preemption small relative to the measured work.
std::size_t calibrate_batch(const TimedOp& op) {
    constexpr double kTargetMs = 30.0;
    double warm_up = sample_ms(op, 1);
    double calibration = warm_up < kTargetMs ? sample_ms(op, 1) : warm_up;
    std::size_t batch = 1;
    if (calibration < kTargetMs) {
        batch = static_cast<std::size_t>(kTargetMs / std::max(calibration, 1e-4)) + 1;
        if (batch > 10000) batch = 10000;
    }
    return batch;
}

}  // namespace

SyntheticData generate_synthetic(std::size_t schema_size, std::size_t event_count,
                                 std::uint64_t seed) {
    ojson properties = ojson::object();
    std::vector<std::string> names;
    std::vector<SynthKind> kinds;
    for (std::size_t i = 0; i < schema_size; ++i) {
        SynthKind kind = kCycle[i % std::size(kCycle)];
        std::string name = field_name(i);
        ojson prop = ojson::object();
        switch (kind) {
            case SynthKind::Plain: prop["type"] = "string"; break;
            case SynthKind::Number: prop["type"] = "number"; break;
            case SynthKind::Integer: prop["type"] = "integer"; break;
            case SynthKind::Boolean: prop["type"] = "boolean"; break;
            case SynthKind::Date:
                prop["type"] = "string";
                prop["format"] = "date";
                break;
            case SynthKind::Enum:
                prop["type"] = "string";
                prop["enum"] = ojson::array({"alpha", "beta", "gamma"});
                break;
        }
        properties[name] = std::move(prop);
        names.push_back(std::move(name));
        kinds.push_back(kind);
    }

    ojson schema = ojson::object();
    schema["description"] = "synthetic";
    schema["type"] = "object";
    schema["properties"] = std::move(properties);
    schema["required"] = names;

    std::mt19937_64 rng(seed);
    std::string csv = format_csv_row(names);
    std::vector<std::string> row(names.size());
    for (std::size_t e = 0; e < event_count; ++e) {
        for (std::size_t c = 0; c < names.size(); ++c) row[c] = cell_for(kinds[c], rng);
        csv += format_csv_row(row);
    }

    return SyntheticData{schema.dump(2) + "\n", std::move(csv)};
}

std::vector<BenchResult> run_bench(const BenchPlan& plan) {
    constexpr std::size_t kSweepColumns = 8;
    std::vector<BenchResult> results;
    settle_clock();

    for (BenchFunction f : plan.functions) {
        std::vector<std::size_t> sizes;
        if (auto it = plan.sizes.find(f); it != plan.sizes.end() && !it->second.empty()) {
            sizes = it->second;
        } else {
            sizes = default_sizes(f);
        }

        // Inputs are prepared outside the timed region; each op covers
        // exactly one pipeline stage.
        std::vector<TimedOp> ops;
        for (std::size_t size : sizes) {
            TimedOp op;
            if (f == BenchFunction::BuildTemplate) {
                SyntheticData data = generate_synthetic(size, 0, plan.seed);
                op.run = [text = data.schema_json]() {
                    SchemaDocument doc = parse_schema(text);
                    TemplateBundle bundle = make_bundle(doc);
                    return bundle.columns.size();
                };
            } else {
                SyntheticData data = generate_synthetic(kSweepColumns, size, plan.seed);
                SchemaDocument doc = parse_schema(data.schema_json);
                TemplateBundle bundle = make_bundle(doc);
                if (f == BenchFunction::ParseToJson) {
                    op.run = [text = data.csv, bundle]() {
                        auto table = parse_csv(text);
                        ConvertOutcome out = convert_table(table, bundle.columns,
                                                           bundle.row_template, ProducerInfo{},
                                                           bundle.event_name);
                        return out.events.events.size();
                    };
                } else {
                    auto table = parse_csv(data.csv);
                    ConvertOutcome out = convert_table(table, bundle.columns, bundle.row_template,
                                                       ProducerInfo{}, bundle.event_name);
                    ojson events = ojson::array();
                    for (const ojson& e : out.events.events) events.push_back(e);
                    op.run = [events, doc]() {
                        ValidationReport report = validate_events(events, doc);
                        return report.issues.size();
                    };
                }
            }
            ops.push_back(std::move(op));
        }

        // Sizes are sampled round robin, one run per pass, so a transient
        // slowdown spreads across the sweep instead of distorting one size.
        std::vector<std::size_t> batches;
        for (const TimedOp& op : ops) batches.push_back(calibrate_batch(op));
        std::vector<std::vector<double>> samples(sizes.size());
        for (int r = 0; r < plan.runs; ++r) {
            for (std::size_t s = 0; s < sizes.size(); ++s) {
                samples[s].push_back(sample_ms(ops[s], batches[s]));
            }
        }

        for (std::size_t s = 0; s < sizes.size(); ++s) {
            BenchResult result;
            result.function = f;
            result.size = sizes[s];
            result.runs_ms = std::move(samples[s]);
            result.mean_ms = mean_of(result.runs_ms);
            result.stddev_ms = population_stddev(result.runs_ms);
            results.push_back(std::move(result));
        }
    }
    return results;
}

std::string report_csv(const std::vector<BenchResult>& results) {
    std::ostringstream out;
    out << "function,size,run,ms\n";
    out.setf(std::ios::fixed);
    out.precision(6);
    for (const BenchResult& r : results) {
        for (std::size_t i = 0; i < r.runs_ms.size(); ++i) {
            out << bench_function_name(r.function) << ',' << r.size << ',' << (i + 1) << ','
                << r.runs_ms[i] << '\n';
        }
        out << bench_function_name(r.function) << ',' << r.size << ",mean," << r.mean_ms << '\n';
        out << bench_function_name(r.function) << ',' << r.size << ",stddev," << r.stddev_ms
            << '\n';
    }
    return out.str();
}

double mean_of(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double population_stddev(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double m = mean_of(xs);
    double sq = 0.0;
    for (double x : xs) sq += (x - m) * (x - m);
    return std::sqrt(sq / static_cast<double>(xs.size()));
}

double linear_fit_r2(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    if (n < 2 || ys.size() != n) return 0.0;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        syy += ys[i] * ys[i];
        sxy += xs[i] * ys[i];
    }
    double num = static_cast<double>(n) * sxy - sx * sy;
    double den = (static_cast<double>(n) * sxx - sx * sx) * (static_cast<double>(n) * syy - sy * sy);
    if (den <= 0.0) return 0.0;
    return num * num / den;
}

int count_mean_inversions(const std::vector<double>& means) {
    int inversions = 0;
    for (std::size_t i = 1; i < means.size(); ++i) {
        if (means[i] < means[i - 1]) ++inversions;
    }
    return inversions;
}

}  // namespace lei2json
