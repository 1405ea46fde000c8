#include "lei2json/template_io.hpp"

#include "lei2json/csv.hpp"
#include "lei2json/errors.hpp"
#include "lei2json/ojson.hpp"
#include "lei2json/util.hpp"

namespace lei2json {

namespace {

constexpr const char* kCsvName = "template.csv";
constexpr const char* kManifestName = "lei-template.json";

ojson column_to_json(const ColumnSpec& col) {
    ojson j = ojson::object();
    j["header"] = col.header;
    j["path"] = col.path;
    j["type"] = kind_name(col.type);
    if (col.item_kind) j["itemType"] = kind_name(*col.item_kind);
    if (col.format) j["format"] = format_name(*col.format);
    if (!col.enum_values.empty()) j["enum"] = col.enum_values;
    if (col.note) j["note"] = *col.note;
    j["required"] = col.required;
    return j;
}

[[noreturn]] void bad_manifest(const std::string& why) {
    throw LeiError(ErrorCode::ManifestMismatch, "bad manifest: " + why);
}

ColumnSpec column_from_json(const ojson& j) {
    if (!j.is_object()) bad_manifest("column entry is not an object");
    ColumnSpec col;
    if (!j.contains("header") || !j["header"].is_string()) bad_manifest("column without header");
    col.header = j["header"].get<std::string>();
    if (!j.contains("path") || !j["path"].is_array() || j["path"].empty()) {
        bad_manifest("column '" + col.header + "' without path");
    }
    for (const ojson& hop : j["path"]) {
        if (!hop.is_string()) bad_manifest("column '" + col.header + "' has a non-string path");
        col.path.push_back(hop.get<std::string>());
    }
    if (!j.contains("type") || !j["type"].is_string()) {
        bad_manifest("column '" + col.header + "' without type");
    }
    auto kind = kind_from_name(j["type"].get<std::string>());
    if (!kind || *kind == PropertyKind::Object) {
        bad_manifest("column '" + col.header + "' has type '" + j["type"].get<std::string>() + "'");
    }
    col.type = *kind;
    if (j.contains("itemType")) {
        auto item = j["itemType"].is_string() ? kind_from_name(j["itemType"].get<std::string>())
                                              : std::nullopt;
        if (!item || *item == PropertyKind::Object || *item == PropertyKind::Array) {
            bad_manifest("column '" + col.header + "' has a bad itemType");
        }
        col.item_kind = *item;
    }
    if (col.type == PropertyKind::Array && !col.item_kind) {
        bad_manifest("array column '" + col.header + "' without itemType");
    }
    if (j.contains("format")) {
        auto format = j["format"].is_string() ? format_from_name(j["format"].get<std::string>())
                                              : std::nullopt;
        if (!format) bad_manifest("column '" + col.header + "' has a bad format");
        col.format = *format;
    }
    if (j.contains("enum")) {
        if (!j["enum"].is_array() || j["enum"].empty()) {
            bad_manifest("column '" + col.header + "' has a bad enum");
        }
        for (const ojson& v : j["enum"]) {
            if (!v.is_string()) bad_manifest("column '" + col.header + "' has a non-string enum");
            col.enum_values.push_back(v.get<std::string>());
        }
    }
    if (j.contains("note")) {
        if (!j["note"].is_string()) bad_manifest("column '" + col.header + "' has a bad note");
        col.note = j["note"].get<std::string>();
    }
    if (!j.contains("required") || !j["required"].is_boolean()) {
        bad_manifest("column '" + col.header + "' without required flag");
    }
    col.required = j["required"].get<bool>();
    return col;
}

}  // namespace

TemplateBundle make_bundle(const SchemaDocument& doc) {
    TemplateBundle bundle;
    bundle.event_name = doc.event_name;
    bundle.columns = get_keys(doc);
    bundle.row_template = merge_properties(doc, bundle.columns);
    bundle.schema_path = doc.source_path;
    return bundle;
}

std::vector<std::filesystem::path> write_bundle(const TemplateBundle& bundle,
                                                const std::filesystem::path& dir) {
    std::vector<std::string> headers;
    for (const ColumnSpec& col : bundle.columns) headers.push_back(col.header);

    ojson manifest = ojson::object();
    manifest["eventName"] = bundle.event_name;
    manifest["schemaPath"] = bundle.schema_path;
    manifest["columns"] = ojson::array();
    for (const ColumnSpec& col : bundle.columns) {
        manifest["columns"].push_back(column_to_json(col));
    }
    manifest["rowTemplate"] = bundle.row_template.skeleton;

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);  // best effort; the writes report failures

    std::filesystem::path csv_path = dir / kCsvName;
    std::filesystem::path manifest_path = dir / kManifestName;
    write_text_file(csv_path, format_csv_row(headers));
    write_text_file(manifest_path, manifest.dump(2) + "\n");
    return {csv_path, manifest_path};
}

TemplateBundle read_bundle(const std::filesystem::path& dir) {
    std::string csv_text = read_text_file(dir / kCsvName);
    std::string manifest_text = read_text_file(dir / kManifestName);

    ojson manifest;
    try {
        manifest = ojson::parse(manifest_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw LeiError(ErrorCode::ParseError,
                       "malformed JSON in '" + (dir / kManifestName).string() + "': " + e.what());
    }
    if (!manifest.is_object()) bad_manifest("manifest top level is not an object");
    if (!manifest.contains("eventName") || !manifest["eventName"].is_string()) {
        bad_manifest("manifest without eventName");
    }
    if (!manifest.contains("columns") || !manifest["columns"].is_array()) {
        bad_manifest("manifest without columns");
    }
    if (!manifest.contains("rowTemplate") || !manifest["rowTemplate"].is_object()) {
        bad_manifest("manifest without rowTemplate");
    }

    TemplateBundle bundle;
    bundle.event_name = manifest["eventName"].get<std::string>();
    if (manifest.contains("schemaPath") && manifest["schemaPath"].is_string()) {
        bundle.schema_path = manifest["schemaPath"].get<std::string>();
    }
    for (const ojson& col : manifest["columns"]) {
        bundle.columns.push_back(column_from_json(col));
    }
    bundle.row_template.skeleton = manifest["rowTemplate"];

    auto rows = parse_csv(csv_text);
    if (rows.empty()) {
        throw LeiError(ErrorCode::ManifestMismatch, "template.csv has no header row");
    }
    std::vector<std::string> expected;
    for (const ColumnSpec& col : bundle.columns) expected.push_back(col.header);
    if (rows.front() != expected) {
        throw LeiError(ErrorCode::ManifestMismatch,
                       "template.csv header row does not match the manifest columns");
    }
    return bundle;
}

}  // namespace lei2json
