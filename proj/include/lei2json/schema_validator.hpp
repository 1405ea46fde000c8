#pragma once

#include <string>
#include <vector>

#include "lei2json/issue.hpp"
#include "lei2json/ojson.hpp"
#include "lei2json/schema_model.hpp"

namespace lei2json {

struct ValidationReport {
    bool valid = true;
    std::vector<ValidationIssue> issues;  // JSON Pointer addressed
};

// Validates an event array against the schema's keyword subset.
//
// Per array element (pointer /i):
//   - a non-object element yields SCHEMA_TYPE_MISMATCH at /i;
//   - otherwise the element is checked recursively against the schema tree
//     in document order. For each schema property:
//       absent + required            REQUIRED_MISSING_FIELD at its pointer
//       present, wrong JSON type     SCHEMA_TYPE_MISMATCH (no further checks
//                                    on that value)
//       present string, enum given   SCHEMA_ENUM_VIOLATION unless an exact,
//                                    case-sensitive member
//       present string, format given SCHEMA_FORMAT_INVALID per formats.hpp
//       array property               each item type-checked at /i/field/j
//   - "integer" accepts any JSON number whose value is mathematically
//     integral (1.0 passes); "number" accepts any JSON number.
//   - unknown keys are ignored (additionalProperties is permissive), which
//     also covers the generator's eventName/producer envelope.
//
// Issues are ordered by (event index, document-order path). The report is
// valid iff it has no issues.
//
// Throws LeiError(InputNotArray) when `events` is not a JSON array.
ValidationReport validate_events(const ojson& events, const SchemaDocument& doc);

/// Report wire form: {"valid": bool, "issues": [{"pointer","code","message"}]}.
ojson report_to_json(const ValidationReport& report);

/// RFC 6901 escaping: "~" -> "~0", "/" -> "~1".
std::string escape_pointer_token(std::string_view token);

}  // namespace lei2json
