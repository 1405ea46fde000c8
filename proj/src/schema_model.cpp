#include "lei2json/schema_model.hpp"

#include <set>

#include "lei2json/errors.hpp"
#include "lei2json/formats.hpp"
#include "lei2json/ojson.hpp"
#include "lei2json/util.hpp"

namespace lei2json {

const char* kind_name(PropertyKind kind) {
    switch (kind) {
        case PropertyKind::Object: return "object";
        case PropertyKind::String: return "string";
        case PropertyKind::Number: return "number";
        case PropertyKind::Integer: return "integer";
        case PropertyKind::Boolean: return "boolean";
        case PropertyKind::Array: return "array";
    }
    return "unknown";
}

const char* format_name(ValueFormat format) {
    switch (format) {
        case ValueFormat::DateTime: return "date-time";
        case ValueFormat::Date: return "date";
        case ValueFormat::Email: return "email";
    }
    return "unknown";
}

std::optional<PropertyKind> kind_from_name(std::string_view name) {
    if (name == "object") return PropertyKind::Object;
    if (name == "string") return PropertyKind::String;
    if (name == "number") return PropertyKind::Number;
    if (name == "integer") return PropertyKind::Integer;
    if (name == "boolean") return PropertyKind::Boolean;
    if (name == "array") return PropertyKind::Array;
    return std::nullopt;
}

std::optional<ValueFormat> format_from_name(std::string_view name) {
    if (name == "date-time") return ValueFormat::DateTime;
    if (name == "date") return ValueFormat::Date;
    if (name == "email") return ValueFormat::Email;
    return std::nullopt;
}

bool value_matches_format(const std::string& value, ValueFormat format) {
    switch (format) {
        case ValueFormat::DateTime: return is_valid_date_time(value);
        case ValueFormat::Date: return is_valid_date(value);
        case ValueFormat::Email: return is_valid_email(value);
    }
    return false;
}

const char* format_hint(ValueFormat format) {
    switch (format) {
        case ValueFormat::DateTime: return "an RFC 3339 date-time";
        case ValueFormat::Date: return "a date (YYYY-MM-DD)";
        case ValueFormat::Email: return "an email address";
    }
    return "the declared format";
}

namespace {

constexpr const char* kSupportedKeywords[] = {
    "type", "properties", "required", "description", "displayName", "enum", "format", "items",
};

bool is_supported_keyword(const std::string& key) {
    for (const char* k : kSupportedKeywords) {
        if (key == k) return true;
    }
    return false;
}

struct NodeParser {
    std::vector<std::string>& warnings;

    void warn_unsupported(const std::string& key, const std::string& where) {
        warnings.push_back("unsupported keyword '" + key + "' at " + (where.empty() ? "/" : where));
    }
    void warn_ignored(const std::string& key, const std::string& why, const std::string& where) {
        warnings.push_back("ignored '" + key + "' (" + why + ") at " + (where.empty() ? "/" : where));
    }

    // Explicit `type` wins; an untyped node with `properties` is an object.
    PropertyKind resolve_kind(const ojson& spec, const std::string& where) {
        if (auto it = spec.find("type"); it != spec.end()) {
            if (!it->is_string()) {
                throw LeiError(ErrorCode::UnsupportedStructure,
                               "'type' must be a string at " + where);
            }
            auto kind = kind_from_name(it->get<std::string>());
            if (!kind) {
                throw LeiError(ErrorCode::UnsupportedStructure,
                               "unsupported type '" + it->get<std::string>() + "' at " + where);
            }
            return *kind;
        }
        if (spec.contains("properties")) return PropertyKind::Object;
        throw LeiError(ErrorCode::UnsupportedStructure, "property without a type at " + where);
    }

    std::set<std::string> required_names(const ojson& spec, const std::string& where) {
        std::set<std::string> names;
        auto it = spec.find("required");
        if (it == spec.end()) return names;
        if (!it->is_array()) {
            warn_ignored("required", "not an array", where);
            return names;
        }
        for (const ojson& entry : *it) {
            if (entry.is_string()) {
                names.insert(entry.get<std::string>());
            } else {
                warn_ignored("required", "non-string entry", where);
            }
        }
        return names;
    }

    PropertyNode parse(const std::string& name, const ojson& spec, bool required,
                       const std::string& where) {
        if (!spec.is_object()) {
            throw LeiError(ErrorCode::UnsupportedStructure,
                           "property definition must be an object at " + where);
        }
        PropertyNode node;
        node.name = name;
        node.required = required;
        node.kind = resolve_kind(spec, where);

        for (auto it = spec.begin(); it != spec.end(); ++it) {
            const std::string& key = it.key();
            if (!is_supported_keyword(key)) {
                warn_unsupported(key, where);
                continue;
            }
            if (key == "type") continue;  // handled by resolve_kind
            if (key == "displayName") {
                if (it->is_string() && !it->get<std::string>().empty()) {
                    node.display_name = it->get<std::string>();
                } else {
                    warn_ignored(key, "not a non-empty string", where);
                }
            } else if (key == "description") {
                if (it->is_string()) {
                    node.description = it->get<std::string>();
                } else {
                    warn_ignored(key, "not a string", where);
                }
            } else if (key == "enum") {
                parse_enum(node, *it, where);
            } else if (key == "format") {
                parse_format(node, *it, where);
            } else if (key == "properties") {
                if (node.kind != PropertyKind::Object) {
                    warn_ignored(key, "non-object property", where);
                }
            } else if (key == "required") {
                if (node.kind != PropertyKind::Object) {
                    warn_ignored(key, "non-object property", where);
                }
            } else if (key == "items") {
                if (node.kind != PropertyKind::Array) {
                    warn_ignored(key, "non-array property", where);
                }
            }
        }

        if (node.kind == PropertyKind::Object) {
            parse_children(node, spec, where);
        } else if (node.kind == PropertyKind::Array) {
            parse_items(node, spec, where);
        }
        return node;
    }

    void parse_enum(PropertyNode& node, const ojson& values, const std::string& where) {
        if (node.kind != PropertyKind::String) {
            warn_ignored("enum", "only supported on string properties", where);
            return;
        }
        if (!values.is_array() || values.empty()) {
            warn_ignored("enum", "not a non-empty array", where);
            return;
        }
        std::vector<std::string> parsed;
        std::set<std::string> seen;
        for (const ojson& v : values) {
            if (!v.is_string() || !seen.insert(v.get<std::string>()).second) {
                warn_ignored("enum", "entries must be unique strings", where);
                return;
            }
            parsed.push_back(v.get<std::string>());
        }
        node.enum_values = std::move(parsed);
    }

    void parse_format(PropertyNode& node, const ojson& value, const std::string& where) {
        if (node.kind != PropertyKind::String) {
            warn_ignored("format", "only supported on string properties", where);
            return;
        }
        if (!value.is_string()) {
            warn_ignored("format", "not a string", where);
            return;
        }
        auto format = format_from_name(value.get<std::string>());
        if (!format) {
            warn_ignored("format", "unsupported format '" + value.get<std::string>() + "'", where);
            return;
        }
        node.format = *format;
    }

    void parse_children(PropertyNode& node, const ojson& spec, const std::string& where) {
        auto it = spec.find("properties");
        if (it == spec.end() || !it->is_object()) {
            if (it != spec.end() && !it->is_object()) {
                throw LeiError(ErrorCode::UnsupportedStructure,
                               "'properties' must be an object at " + where);
            }
            return;  // empty object node: contributes no columns
        }
        std::set<std::string> required = required_names(spec, where);
        for (auto child = it->begin(); child != it->end(); ++child) {
            node.children.push_back(parse(child.key(), child.value(),
                                          required.contains(child.key()),
                                          where + "/properties/" + child.key()));
        }
    }

    void parse_items(PropertyNode& node, const ojson& spec, const std::string& where) {
        auto it = spec.find("items");
        if (it == spec.end()) {
            throw LeiError(ErrorCode::UnsupportedStructure,
                           "array property without 'items' at " + where);
        }
        if (!it->is_object()) {
            throw LeiError(ErrorCode::UnsupportedStructure,
                           "'items' must be an object at " + where);
        }
        const ojson& items = *it;
        auto type_it = items.find("type");
        if (type_it == items.end() || !type_it->is_string()) {
            throw LeiError(ErrorCode::UnsupportedStructure,
                           "array items without a type at " + where);
        }
        auto kind = kind_from_name(type_it->get<std::string>());
        if (!kind || *kind == PropertyKind::Object || *kind == PropertyKind::Array) {
            throw LeiError(ErrorCode::UnsupportedStructure,
                           "arrays may only hold primitive items at " + where);
        }
        node.item_kind = *kind;
        for (auto item_key = items.begin(); item_key != items.end(); ++item_key) {
            if (item_key.key() != "type") {
                warn_unsupported(item_key.key(), where + "/items");
            }
        }
    }
};

}  // namespace

SchemaDocument parse_schema(std::string_view json_text, std::string source_path) {
    ojson parsed;
    try {
        parsed = ojson::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw LeiError(ErrorCode::ParseError,
                       "malformed JSON in '" + source_path + "': " + e.what());
    }
    if (!parsed.is_object()) {
        throw LeiError(ErrorCode::NotObjectRoot,
                       "schema top level must be a JSON object in '" + source_path + "'");
    }

    SchemaDocument doc;
    doc.source_path = std::move(source_path);

    NodeParser parser{doc.warnings};
    // Root type check first: a non-object root is structural, not naming.
    try {
        if (parser.resolve_kind(parsed, "") != PropertyKind::Object) {
            throw LeiError(ErrorCode::NotObjectRoot, "");
        }
    } catch (const LeiError&) {
        throw LeiError(ErrorCode::NotObjectRoot,
                       "top-level type is not object in '" + doc.source_path + "'");
    }

    auto desc = parsed.find("description");
    if (desc == parsed.end() || !desc->is_string() || trim(desc->get<std::string>()).empty()) {
        throw LeiError(ErrorCode::MissingEventName,
                       "schema has no usable top-level description in '" + doc.source_path + "'");
    }
    doc.event_name = trim(desc->get<std::string>());

    doc.root = parser.parse("", parsed, true, "");
    return doc;
}

SchemaDocument load_schema(const std::filesystem::path& path) {
    return parse_schema(read_text_file(path), path.string());
}

}  // namespace lei2json
