#pragma once

#include <cstddef>
#include <string>
#include <variant>

namespace lei2json {

enum class IssueCode {
    // tabular (cell / binding) issues
    TypeMismatch,
    FormatInvalid,
    EnumViolation,
    RequiredMissing,
    UnknownColumn,
    MissingColumn,
    DuplicateHeader,
    // schema validation issues (JSON Pointer addressed)
    RequiredMissingField,
    SchemaTypeMismatch,
    SchemaEnumViolation,
    SchemaFormatInvalid,
};

const char* issue_code_name(IssueCode code);  // "TYPE_MISMATCH", ...

/// Row 0 addresses the header row; data rows are numbered from 1, matching
/// what a spreadsheet user sees once the header row is discounted.
struct TabularAddress {
    std::size_t row = 0;
    std::string header;

    bool operator==(const TabularAddress&) const = default;
};

/// A located validation problem: either a cell address in the input sheet or
/// a JSON Pointer into the event array, never both.
struct ValidationIssue {
    IssueCode code = IssueCode::TypeMismatch;
    std::variant<TabularAddress, std::string> location;  // string = JSON Pointer
    std::string message;

    bool is_tabular() const { return std::holds_alternative<TabularAddress>(location); }
    const TabularAddress& address() const { return std::get<TabularAddress>(location); }
    const std::string& pointer() const { return std::get<std::string>(location); }

    static ValidationIssue at_cell(IssueCode code, std::size_t row, std::string header,
                                   std::string message);
    static ValidationIssue at_pointer(IssueCode code, std::string pointer, std::string message);

    bool operator==(const ValidationIssue&) const = default;
};

/// One-line rendering: "row 2, Live Weight: TYPE_MISMATCH: ..." for cells
/// ("header row" when row is 0), "/0/weight: REQUIRED_MISSING_FIELD: ..."
/// for pointers.
std::string format_issue(const ValidationIssue& issue);

}  // namespace lei2json
