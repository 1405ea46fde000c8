#include "lei2json/schema_validator.hpp"

#include <algorithm>
#include <cmath>

#include "lei2json/errors.hpp"

namespace lei2json {

std::string escape_pointer_token(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    for (char c : token) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

namespace {

bool is_integral_number(const ojson& value) {
    if (value.is_number_integer() || value.is_number_unsigned()) return true;
    if (!value.is_number_float()) return false;
    double d = value.get<double>();
    return std::isfinite(d) && d == std::trunc(d);
}

bool matches_kind(const ojson& value, PropertyKind kind) {
    switch (kind) {
        case PropertyKind::Object: return value.is_object();
        case PropertyKind::String: return value.is_string();
        case PropertyKind::Number: return value.is_number();
        case PropertyKind::Integer: return is_integral_number(value);
        case PropertyKind::Boolean: return value.is_boolean();
        case PropertyKind::Array: return value.is_array();
    }
    return false;
}

std::string type_mismatch_message(const ojson& value, PropertyKind kind) {
    if (kind == PropertyKind::Integer && value.is_number()) {
        return "expected integer, got non-integral number";
    }
    return std::string("expected ") + kind_name(kind) + ", got " + value.type_name();
}

std::string enum_list(const std::vector<std::string>& values) {
    std::string out;
    for (const std::string& v : values) {
        if (!out.empty()) out += ", ";
        out += v;
    }
    return out;
}

struct Checker {
    std::vector<ValidationIssue>& issues;

    void check_string(const PropertyNode& node, const ojson& value, const std::string& pointer) {
        const std::string& text = value.get_ref<const std::string&>();
        if (!node.enum_values.empty() &&
            std::find(node.enum_values.begin(), node.enum_values.end(), text) ==
                node.enum_values.end()) {
            issues.push_back(ValidationIssue::at_pointer(
                IssueCode::SchemaEnumViolation, pointer,
                "'" + text + "' is not one of: " + enum_list(node.enum_values)));
        }
        if (node.format && !value_matches_format(text, *node.format)) {
            issues.push_back(ValidationIssue::at_pointer(
                IssueCode::SchemaFormatInvalid, pointer,
                "'" + text + "' is not " + format_hint(*node.format)));
        }
    }

    void check_array(const PropertyNode& node, const ojson& value, const std::string& pointer) {
        PropertyKind item_kind = node.item_kind.value_or(PropertyKind::String);
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (!matches_kind(value[i], item_kind)) {
                issues.push_back(ValidationIssue::at_pointer(
                    IssueCode::SchemaTypeMismatch, pointer + "/" + std::to_string(i),
                    type_mismatch_message(value[i], item_kind)));
            }
        }
    }

    // Unknown keys in `value` are ignored: only schema-declared properties
    // are inspected, in document order.
    void check_object(const PropertyNode& node, const ojson& value, const std::string& pointer) {
        for (const PropertyNode& child : node.children) {
            std::string child_pointer = pointer + "/" + escape_pointer_token(child.name);
            auto it = value.find(child.name);
            if (it == value.end()) {
                if (child.required) {
                    issues.push_back(ValidationIssue::at_pointer(
                        IssueCode::RequiredMissingField, child_pointer,
                        "required property is missing"));
                }
                continue;
            }
            if (!matches_kind(*it, child.kind)) {
                issues.push_back(ValidationIssue::at_pointer(
                    IssueCode::SchemaTypeMismatch, child_pointer,
                    type_mismatch_message(*it, child.kind)));
                continue;  // no further checks on a value of the wrong type
            }
            switch (child.kind) {
                case PropertyKind::Object: check_object(child, *it, child_pointer); break;
                case PropertyKind::String: check_string(child, *it, child_pointer); break;
                case PropertyKind::Array: check_array(child, *it, child_pointer); break;
                default: break;
            }
        }
    }
};

}  // namespace

ValidationReport validate_events(const ojson& events, const SchemaDocument& doc) {
    if (!events.is_array()) {
        throw LeiError(ErrorCode::InputNotArray, "expected a JSON array of events");
    }
    ValidationReport report;
    Checker checker{report.issues};
    for (std::size_t i = 0; i < events.size(); ++i) {
        std::string pointer = "/" + std::to_string(i);
        if (!events[i].is_object()) {
            report.issues.push_back(ValidationIssue::at_pointer(
                IssueCode::SchemaTypeMismatch, pointer,
                std::string("expected object, got ") + events[i].type_name()));
            continue;
        }
        checker.check_object(doc.root, events[i], pointer);
    }
    report.valid = report.issues.empty();
    return report;
}

ojson report_to_json(const ValidationReport& report) {
    ojson out = ojson::object();
    out["valid"] = report.valid;
    out["issues"] = ojson::array();
    for (const ValidationIssue& issue : report.issues) {
        ojson entry = ojson::object();
        entry["pointer"] = issue.pointer();
        entry["code"] = issue_code_name(issue.code);
        entry["message"] = issue.message;
        out["issues"].push_back(std::move(entry));
    }
    return out;
}

}  // namespace lei2json
