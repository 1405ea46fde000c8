#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "lei2json/bench.hpp"
#include "lei2json/csv.hpp"
#include "lei2json/errors.hpp"
#include "lei2json/issue.hpp"
#include "lei2json/json_generator.hpp"
#include "lei2json/ojson.hpp"
#include "lei2json/schema_model.hpp"
#include "lei2json/schema_validator.hpp"
#include "lei2json/template_io.hpp"
#include "lei2json/util.hpp"
#include "lei2json/validation_service.hpp"

namespace {

using namespace lei2json;

// 0 success, 1 invalid data, 2 schema/template problem, 3 I/O, 4 usage.
int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::InputNotArray: return 1;
        case ErrorCode::IoError: return 3;
        case ErrorCode::UsageError: return 4;
        default: return 2;
    }
}

void print_warnings(const SchemaDocument& doc) {
    for (const std::string& w : doc.warnings) std::cerr << "warning: " << w << '\n';
}

void print_issues(const std::vector<ValidationIssue>& issues, const char* label) {
    for (const ValidationIssue& issue : issues) {
        std::cerr << label << ": " << format_issue(issue) << '\n';
    }
}

void write_output(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        std::cout.flush();
    } else {
        write_text_file(out, text);
    }
}

char parse_delimiter(const std::string& value) {
    if (value == "\\t") return '\t';
    if (value.size() != 1) {
        throw LeiError(ErrorCode::UsageError, "--delimiter must be a single character");
    }
    return value[0];
}

int run_template(const std::string& schema_path, const std::string& out_dir) {
    SchemaDocument doc = load_schema(schema_path);
    print_warnings(doc);
    TemplateBundle bundle = make_bundle(doc);
    for (const auto& path : write_bundle(bundle, out_dir)) {
        std::cerr << "wrote " << path.string() << '\n';
    }
    return 0;
}

int run_convert(const std::string& schema_path, const std::string& csv_path,
                const std::string& producer_path, const std::string& pic, const std::string& out,
                bool pretty, const std::string& delimiter) {
    SchemaDocument doc = load_schema(schema_path);
    print_warnings(doc);
    TemplateBundle bundle = make_bundle(doc);

    ProducerInfo producer;
    if (!producer_path.empty()) {
        ojson parsed;
        try {
            parsed = ojson::parse(read_text_file(producer_path));
        } catch (const nlohmann::json::parse_error& e) {
            throw LeiError(ErrorCode::ParseError,
                           "malformed JSON in '" + producer_path + "': " + e.what());
        }
        producer = producer_from_json(parsed);
    }
    if (!pic.empty()) producer.pic = pic;

    auto table = parse_csv(read_text_file(csv_path), parse_delimiter(delimiter));
    ConvertOutcome outcome =
        convert_table(table, bundle.columns, bundle.row_template, producer, bundle.event_name);
    print_issues(outcome.warnings, "warning");
    if (!outcome.ok()) {
        print_issues(outcome.issues, "issue");
        std::cerr << outcome.issues.size() << " issue(s) found; no output written\n";
        return 1;
    }
    write_output(serialize(outcome.events, pretty) + "\n", out);
    std::cerr << "converted " << outcome.events.events.size() << " row(s)\n";
    return 0;
}

int run_validate(const std::string& schema_path, const std::string& events_path,
                 const std::string& out) {
    SchemaDocument doc = load_schema(schema_path);
    print_warnings(doc);
    ojson events;
    try {
        events = ojson::parse(read_text_file(events_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw LeiError(ErrorCode::ParseError,
                       "malformed JSON in '" + events_path + "': " + e.what());
    }
    ValidationReport report = validate_events(events, doc);
    write_output(report_to_json(report).dump(2) + "\n", out);
    return report.valid ? 0 : 1;
}

int run_serve(std::string schema_dir, std::string host, int port) {
    if (schema_dir.empty()) {
        if (const char* env = std::getenv("SCHEMA_DIR")) schema_dir = env;
    }
    if (schema_dir.empty()) {
        throw LeiError(ErrorCode::UsageError,
                       "no schema directory (pass SCHEMA_DIR or set the SCHEMA_DIR variable)");
    }
    ServiceConfig config;
    config.host = host;
    config.port = port;
    config.schema_dir = schema_dir;

    ValidationService service(std::move(config));
    for (const std::string& note : service.startup_notes()) std::cerr << "warning: " << note << '\n';
    std::cerr << "serving " << service.schema_names().size() << " schema(s) on " << host << ':'
              << port << '\n';
    if (!service.serve()) {
        throw LeiError(ErrorCode::IoError, "cannot listen on " + host + ":" + std::to_string(port));
    }
    return 0;
}

BenchFunction bench_function_from_name(const std::string& name) {
    if (name == "buildTemplate") return BenchFunction::BuildTemplate;
    if (name == "parseToJSON") return BenchFunction::ParseToJson;
    if (name == "validate") return BenchFunction::Validate;
    throw LeiError(ErrorCode::UsageError,
                   "unknown bench function '" + name +
                       "' (expected buildTemplate, parseToJSON, or validate)");
}

int run_bench_cmd(const std::vector<std::string>& function_names,
                  const std::vector<std::size_t>& sizes, int runs, std::uint64_t seed,
                  const std::string& out) {
    if (runs < 1) throw LeiError(ErrorCode::UsageError, "--runs must be at least 1");
    BenchPlan plan;
    plan.runs = runs;
    plan.seed = seed;
    if (function_names.empty()) {
        plan.functions = {BenchFunction::BuildTemplate, BenchFunction::ParseToJson,
                          BenchFunction::Validate};
    } else {
        for (const std::string& name : function_names) {
            plan.functions.push_back(bench_function_from_name(name));
        }
    }
    if (!sizes.empty()) {
        for (BenchFunction f : plan.functions) plan.sizes[f] = sizes;
    }
    for (BenchFunction f : plan.functions) {
        std::cerr << "benchmarking " << bench_function_name(f) << "...\n";
    }
    write_output(report_csv(run_bench(plan)), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Event template and JSON conversion toolkit for livestock event schemas"};
    app.require_subcommand(1);

    std::string schema_path, csv_path, events_path, out, producer_path, pic, delimiter = ",";
    bool pretty = false;

    auto* cmd_template =
        app.add_subcommand("template", "Write template.csv and lei-template.json for a schema");
    cmd_template->add_option("SCHEMA", schema_path, "event schema JSON file")->required();
    cmd_template->add_option("-o,--out", out, "output directory")->required();

    auto* cmd_convert = app.add_subcommand("convert", "Convert a filled CSV to a JSON event array");
    cmd_convert->add_option("SCHEMA", schema_path, "event schema JSON file")->required();
    cmd_convert->add_option("CSV", csv_path, "filled data CSV")->required();
    cmd_convert->add_option("-p,--producer", producer_path, "producer metadata JSON file");
    cmd_convert->add_option("--pic", pic, "producer property identification code");
    cmd_convert->add_option("-o,--out", out, "output file, '-' for stdout (default)");
    cmd_convert->add_flag("--pretty", pretty, "indent the JSON output");
    cmd_convert->add_option("--delimiter", delimiter, "CSV delimiter (single character or \\t)");

    auto* cmd_validate = app.add_subcommand("validate", "Validate a JSON event array");
    cmd_validate->add_option("SCHEMA", schema_path, "event schema JSON file")->required();
    cmd_validate->add_option("EVENTS", events_path, "JSON event array file")->required();
    cmd_validate->add_option("-o,--out", out, "report file, '-' for stdout (default)");

    std::string host = "0.0.0.0", schema_dir;
    int port = 8080;
    if (const char* env_port = std::getenv("PORT")) port = std::atoi(env_port);
    auto* cmd_serve = app.add_subcommand("serve", "Run the HTTP validation service");
    cmd_serve->add_option("SCHEMA_DIR", schema_dir, "directory of event schema JSON files");
    cmd_serve->add_option("--host", host, "bind address");
    cmd_serve->add_option("--port", port, "TCP port (default: PORT variable or 8080)");

    std::vector<std::string> bench_functions;
    std::vector<std::size_t> bench_sizes;
    int runs = 10;
    std::uint64_t seed = 42;
    auto* cmd_bench = app.add_subcommand("bench", "Time the pipeline stages on synthetic data");
    cmd_bench->add_option("--functions", bench_functions,
                          "functions to time (buildTemplate, parseToJSON, validate)")
        ->delimiter(',');
    cmd_bench->add_option("--sizes", bench_sizes, "input sizes, overrides the defaults")
        ->delimiter(',');
    cmd_bench->add_option("--runs", runs, "timed runs per point");
    cmd_bench->add_option("--seed", seed, "synthetic data seed");
    cmd_bench->add_option("-o,--out", out, "report file, '-' for stdout (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 4;
    }

    try {
        if (app.got_subcommand(cmd_template)) return run_template(schema_path, out);
        if (app.got_subcommand(cmd_convert)) {
            return run_convert(schema_path, csv_path, producer_path, pic, out, pretty, delimiter);
        }
        if (app.got_subcommand(cmd_validate)) return run_validate(schema_path, events_path, out);
        if (app.got_subcommand(cmd_serve)) return run_serve(schema_dir, host, port);
        if (app.got_subcommand(cmd_bench)) {
            return run_bench_cmd(bench_functions, bench_sizes, runs, seed, out);
        }
    } catch (const LeiError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 4;
}
