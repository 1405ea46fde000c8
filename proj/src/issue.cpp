#include "lei2json/issue.hpp"

namespace lei2json {

const char* issue_code_name(IssueCode code) {
    switch (code) {
        case IssueCode::TypeMismatch: return "TYPE_MISMATCH";
        case IssueCode::FormatInvalid: return "FORMAT_INVALID";
        case IssueCode::EnumViolation: return "ENUM_VIOLATION";
        case IssueCode::RequiredMissing: return "REQUIRED_MISSING";
        case IssueCode::UnknownColumn: return "UNKNOWN_COLUMN";
        case IssueCode::MissingColumn: return "MISSING_COLUMN";
        case IssueCode::DuplicateHeader: return "DUPLICATE_HEADER";
        case IssueCode::RequiredMissingField: return "REQUIRED_MISSING_FIELD";
        case IssueCode::SchemaTypeMismatch: return "SCHEMA_TYPE_MISMATCH";
        case IssueCode::SchemaEnumViolation: return "SCHEMA_ENUM_VIOLATION";
        case IssueCode::SchemaFormatInvalid: return "SCHEMA_FORMAT_INVALID";
    }
    return "UNKNOWN";
}

ValidationIssue ValidationIssue::at_cell(IssueCode code, std::size_t row, std::string header,
                                         std::string message) {
    return ValidationIssue{code, TabularAddress{row, std::move(header)}, std::move(message)};
}

ValidationIssue ValidationIssue::at_pointer(IssueCode code, std::string pointer,
                                            std::string message) {
    return ValidationIssue{code, std::move(pointer), std::move(message)};
}

std::string format_issue(const ValidationIssue& issue) {
    std::string out;
    if (issue.is_tabular()) {
        const TabularAddress& at = issue.address();
        if (at.row == 0) {
            out = "header row";
        } else {
            out = "row " + std::to_string(at.row);
        }
        if (!at.header.empty()) {
            out += ", " + at.header;
        }
    } else {
        out = issue.pointer();
    }
    out += ": ";
    out += issue_code_name(issue.code);
    if (!issue.message.empty()) {
        out += ": " + issue.message;
    }
    return out;
}

}  // namespace lei2json
