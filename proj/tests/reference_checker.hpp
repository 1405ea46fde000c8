#pragma once

#include <string>
#include <vector>

#include "lei2json/ojson.hpp"

namespace testsupport {

struct RefIssue {
    std::string pointer;
    std::string code;  // issue code name, e.g. "SCHEMA_TYPE_MISMATCH"

    bool operator<(const RefIssue& other) const {
        return pointer != other.pointer ? pointer < other.pointer : code < other.code;
    }
    bool operator==(const RefIssue&) const = default;
};

// Brute-force validation of an event array against a raw schema JSON value,
// written independently of the production validator (no SchemaDocument, own
// format checks). Used to cross-check verdicts and issue locations; issue
// order is unspecified.
std::vector<RefIssue> ref_validate(const lei2json::ojson& schema, const lei2json::ojson& events);

}  // namespace testsupport
