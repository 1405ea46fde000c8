#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lei2json/csv.hpp"
#include "lei2json/flattener.hpp"
#include "lei2json/issue.hpp"
#include "lei2json/ojson.hpp"

namespace lei2json {

/// Header-name association between template columns and CSV columns, making
/// the physical column order irrelevant.
struct Binding {
    std::vector<std::string> headers;        // template column order
    std::vector<std::size_t> spec_to_csv;    // template column -> CSV column
    std::map<std::string, std::size_t> header_to_csv;
};

struct BindingResult {
    std::optional<Binding> binding;          // set iff errors is empty
    std::vector<ValidationIssue> errors;     // MISSING_COLUMN, DUPLICATE_HEADER
    std::vector<ValidationIssue> warnings;   // UNKNOWN_COLUMN (non-fatal)

    bool ok() const { return binding.has_value(); }
};

/// Binds CSV header names (compared after trimming surrounding whitespace)
/// to column specs. Extra CSV columns warn; missing spec columns and
/// duplicated CSV headers are errors.
BindingResult bind_columns(const std::vector<std::string>& csv_headers,
                           const std::vector<ColumnSpec>& cols);

/// A coerced cell. `value` is only meaningful when `present` is true; an
/// empty cell is absent, not null.
struct CellValue {
    ojson value;
    bool present = false;

    bool operator==(const CellValue&) const = default;
};

/// One non-empty data row, cells aligned with Binding::headers.
struct RowValues {
    std::size_t source_row = 0;  // 1-based, counted over all data rows
    std::vector<CellValue> cells;

    bool operator==(const RowValues&) const = default;
};

struct BoundSheet {
    Binding binding;
    std::vector<RowValues> rows;   // fully empty data rows are skipped
    std::size_t row_count = 0;     // == rows.size()
};

struct IngestResult {
    BoundSheet sheet;
    std::vector<ValidationIssue> issues;  // all rows, ordered by (row, column)

    bool ok() const { return issues.empty(); }
};

// Per-cell validation and coercion. Cells are trimmed, then coerced by their
// column type:
//   string    kept verbatim; enum membership is exact and case-sensitive;
//             format checked when declared
//   number    strict decimal: optional sign, digits, optional fraction,
//             optional exponent; '.' separator only
//   integer   optional sign + digits only
//   boolean   "true" / "false", case-insensitive
//   array     cell split on ';' (no escaping), each trimmed item coerced to
//             the column's item type
// An empty cell is absent; absent + required yields REQUIRED_MISSING. All
// issues across all rows are collected, never fail-fast. Short rows are
// padded with empty cells; surplus cells beyond the header width are
// ignored.
IngestResult validate_cells(const std::vector<CsvRow>& data_rows, const Binding& binding,
                            const std::vector<ColumnSpec>& cols);

}  // namespace lei2json
