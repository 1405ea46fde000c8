#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lei2json/ojson.hpp"
#include "lei2json/schema_model.hpp"

namespace lei2json {

/// One data-entry column derived from a schema leaf.
struct ColumnSpec {
    std::string header;                     // displayName, or property name as fallback
    std::vector<std::string> path;          // property names from root to leaf
    PropertyKind type = PropertyKind::String;  // never Object
    std::optional<PropertyKind> item_kind;  // present iff type == Array
    std::optional<ValueFormat> format;
    std::vector<std::string> enum_values;
    std::optional<std::string> note;        // property description
    bool required = false;                  // required along the whole path

    bool operator==(const ColumnSpec&) const = default;
};

/// Nested JSON skeleton mirroring the schema's object tree. Every leaf holds
/// its column header as placeholder text; generation clones the skeleton per
/// data row and substitutes the row's values for the placeholders.
struct RowTemplate {
    ojson skeleton = ojson::object();

    bool operator==(const RowTemplate&) const = default;
};

/// Depth-first, document-order walk of the schema leaves. A leaf is required
/// only when every hop from the root down to it is required.
/// Throws LeiError(DuplicateHeader) when two leaves share a header.
std::vector<ColumnSpec> get_keys(const SchemaDocument& doc);

/// Builds the placeholder skeleton for `doc`. `cols` must be the output of
/// get_keys on the same document; the placeholder set and the header set are
/// checked to match one-to-one (LeiError(PreconditionViolation) otherwise).
RowTemplate merge_properties(const SchemaDocument& doc, const std::vector<ColumnSpec>& cols);

}  // namespace lei2json
