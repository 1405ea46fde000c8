#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lei2json/flattener.hpp"
#include "lei2json/schema_model.hpp"

namespace lei2json {

/// Portable on-disk template: a header-row CSV for data entry plus a JSON
/// manifest carrying everything CSV cannot (notes, types, formats, enums,
/// required flags, and the row skeleton).
struct TemplateBundle {
    std::string event_name;
    std::vector<ColumnSpec> columns;
    RowTemplate row_template;
    std::string schema_path;

    bool operator==(const TemplateBundle&) const = default;
};

TemplateBundle make_bundle(const SchemaDocument& doc);

/// Writes `template.csv` (single header row, RFC 4180, LF) and
/// `lei-template.json` into `dir`; returns the written paths. Output bytes
/// are stable across runs for the same bundle.
std::vector<std::filesystem::path> write_bundle(const TemplateBundle& bundle,
                                                const std::filesystem::path& dir);

/// Inverse of write_bundle. Throws LeiError(IoError) when either file is
/// missing and LeiError(ManifestMismatch) when the CSV header row does not
/// match the manifest's column headers.
TemplateBundle read_bundle(const std::filesystem::path& dir);

}  // namespace lei2json
