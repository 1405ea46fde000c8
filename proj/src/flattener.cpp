#include "lei2json/flattener.hpp"

#include <set>

#include "lei2json/errors.hpp"

namespace lei2json {

namespace {

void collect_leaves(const PropertyNode& node, std::vector<std::string>& path,
                    bool path_required, std::vector<ColumnSpec>& out) {
    for (const PropertyNode& child : node.children) {
        path.push_back(child.name);
        bool required = path_required && child.required;
        if (child.kind == PropertyKind::Object) {
            collect_leaves(child, path, required, out);
        } else {
            ColumnSpec col;
            col.header = child.display_name.value_or(child.name);
            col.path = path;
            col.type = child.kind;
            col.item_kind = child.item_kind;
            col.format = child.format;
            col.enum_values = child.enum_values;
            col.note = child.description;
            col.required = required;
            out.push_back(std::move(col));
        }
        path.pop_back();
    }
}

void build_skeleton(const PropertyNode& node, ojson& out) {
    for (const PropertyNode& child : node.children) {
        if (child.kind == PropertyKind::Object) {
            out[child.name] = ojson::object();
            build_skeleton(child, out[child.name]);
        } else {
            out[child.name] = child.display_name.value_or(child.name);
        }
    }
}

void collect_placeholders(const ojson& node, std::multiset<std::string>& out) {
    for (const auto& [key, value] : node.items()) {
        if (value.is_object()) {
            collect_placeholders(value, out);
        } else {
            out.insert(value.get<std::string>());
        }
    }
}

}  // namespace

std::vector<ColumnSpec> get_keys(const SchemaDocument& doc) {
    std::vector<ColumnSpec> cols;
    std::vector<std::string> path;
    collect_leaves(doc.root, path, true, cols);

    std::set<std::string> seen;
    for (const ColumnSpec& col : cols) {
        if (!seen.insert(col.header).second) {
            throw LeiError(ErrorCode::DuplicateHeader,
                           "two columns share the header '" + col.header + "'");
        }
    }
    return cols;
}

RowTemplate merge_properties(const SchemaDocument& doc, const std::vector<ColumnSpec>& cols) {
    RowTemplate tpl;
    build_skeleton(doc.root, tpl.skeleton);

    std::multiset<std::string> placeholders;
    collect_placeholders(tpl.skeleton, placeholders);
    std::multiset<std::string> headers;
    for (const ColumnSpec& col : cols) headers.insert(col.header);
    if (placeholders != headers) {
        throw LeiError(ErrorCode::PreconditionViolation,
                       "row template placeholders do not match the column headers");
    }
    return tpl;
}

}  // namespace lei2json
