#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lei2json {

enum class PropertyKind { Object, String, Number, Integer, Boolean, Array };
enum class ValueFormat { DateTime, Date, Email };

const char* kind_name(PropertyKind kind);
const char* format_name(ValueFormat format);
std::optional<PropertyKind> kind_from_name(std::string_view name);
std::optional<ValueFormat> format_from_name(std::string_view name);

/// Dispatches to the matching predicate in formats.hpp.
bool value_matches_format(const std::string& value, ValueFormat format);
/// Human description for messages: "a date (YYYY-MM-DD)", ...
const char* format_hint(ValueFormat format);

/// One node of the parsed schema tree. Children are kept in document order,
/// which later fixes the column order of the template.
struct PropertyNode {
    std::string name;
    std::optional<std::string> display_name;
    std::optional<std::string> description;
    PropertyKind kind = PropertyKind::String;
    std::optional<ValueFormat> format;
    std::vector<std::string> enum_values;    // empty when the property has no enum
    std::vector<PropertyNode> children;      // object kind only
    std::optional<PropertyKind> item_kind;   // array kind only, always primitive
    bool required = false;                   // listed in the parent's `required`

    bool operator==(const PropertyNode&) const = default;
};

/// Immutable result of loading an event schema file.
struct SchemaDocument {
    std::string event_name;             // trimmed top-level description
    PropertyNode root;                  // always Object kind
    std::string source_path;
    std::vector<std::string> warnings;  // one entry per unsupported keyword occurrence

    bool operator==(const SchemaDocument&) const = default;
};

// Supported keyword subset: type, properties, required, description,
// displayName, enum (strings), format (date-time, date, email), items with a
// primitive item type. Anything else is collected as a warning and ignored.
// A `required` entry naming a property that does not exist is ignored.
//
// Throws LeiError with code:
//   ParseError            malformed JSON text
//   NotObjectRoot         top-level type is not (or cannot be) object
//   MissingEventName      no or empty top-level description
//   UnsupportedStructure  array of objects / nested arrays / untyped property
//   IoError               unreadable file (load_schema only)
SchemaDocument load_schema(const std::filesystem::path& path);
SchemaDocument parse_schema(std::string_view json_text, std::string source_path = "<memory>");

}  // namespace lei2json
