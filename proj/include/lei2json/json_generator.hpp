#pragma once

#include <string>
#include <vector>

#include "lei2json/flattener.hpp"
#include "lei2json/ojson.hpp"
#include "lei2json/tabular_ingest.hpp"

namespace lei2json {

/// Producer metadata attached to every generated event. Empty fields are
/// treated as not provided and omitted from the output.
struct ProducerInfo {
    std::string full_name;
    std::string email;
    std::string address;
    std::string phone;
    std::string pic;  // property identification code

    bool operator==(const ProducerInfo&) const = default;
};

/// Reads {"fullName","email","address","phone"} from a parsed producer file.
/// Unknown keys are ignored; a non-empty email must satisfy the email format
/// rule (LeiError(UsageError) otherwise).
ProducerInfo producer_from_json(const ojson& value);

struct EventArray {
    std::vector<ojson> events;  // one per non-empty data row, in row order
    std::string event_name;
};

/// Transforms validated rows into events: clones the row template per row,
/// substitutes each placeholder with the row's typed value for that header,
/// drops absent leaves and objects that become empty, then appends
/// `eventName` and the populated `producer` fields. The ingest result must
/// be issue-free (LeiError(PreconditionViolation) otherwise).
EventArray parse_to_json(const IngestResult& ingested, const RowTemplate& row_template,
                         const ProducerInfo& producer, const std::string& event_name);

/// Canonical serialization: per-event keys in row-template declaration
/// order, then eventName, then producer; pretty = 2-space indent. Equal
/// inputs always serialize to identical bytes.
std::string serialize(const EventArray& events, bool pretty = false);

/// Whole conversion pipeline for one in-memory table (header row + data
/// rows): bind, validate cells, and generate. `events` is only populated
/// when there are no binding errors and no cell issues.
struct ConvertOutcome {
    EventArray events;
    std::vector<ValidationIssue> issues;    // binding errors + cell issues
    std::vector<ValidationIssue> warnings;  // unknown columns

    bool ok() const { return issues.empty(); }
};

ConvertOutcome convert_table(const std::vector<CsvRow>& table, const std::vector<ColumnSpec>& cols,
                             const RowTemplate& row_template, const ProducerInfo& producer,
                             const std::string& event_name);

}  // namespace lei2json
