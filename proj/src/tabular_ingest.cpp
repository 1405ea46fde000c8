#include "lei2json/tabular_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>

#include "lei2json/util.hpp"

namespace lei2json {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool is_strict_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    return all_digits(s);
}

// Optional sign, digits, optional '.' fraction, optional exponent. Nothing
// locale dependent: '.' is the only separator and digits are mandatory on
// both sides of it.
bool is_strict_number(std::string_view s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    if (i < n && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_start) return false;
    if (i < n && s[i] == '.') {
        ++i;
        std::size_t frac_start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == frac_start) return false;
    }
    if (i < n && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < n && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t exp_start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == exp_start) return false;
    }
    return i == n;
}

// Returns the coerced scalar or nullopt with `error` describing the failure.
std::optional<ojson> coerce_scalar(const std::string& raw, PropertyKind kind,
                                   std::string& error) {
    switch (kind) {
        case PropertyKind::String:
            return ojson(raw);
        case PropertyKind::Number: {
            if (!is_strict_number(raw)) {
                error = "'" + raw + "' is not a number";
                return std::nullopt;
            }
            try {
                return ojson(std::stod(raw));
            } catch (const std::out_of_range&) {
                error = "'" + raw + "' is out of range for a number";
                return std::nullopt;
            }
        }
        case PropertyKind::Integer: {
            if (!is_strict_integer(raw)) {
                error = "'" + raw + "' is not an integer";
                return std::nullopt;
            }
            try {
                return ojson(std::stoll(raw));
            } catch (const std::out_of_range&) {
                error = "'" + raw + "' is out of range for an integer";
                return std::nullopt;
            }
        }
        case PropertyKind::Boolean: {
            std::string lowered = to_lower(raw);
            if (lowered == "true") return ojson(true);
            if (lowered == "false") return ojson(false);
            error = "'" + raw + "' is not true/false";
            return std::nullopt;
        }
        default:
            error = "unsupported cell type";
            return std::nullopt;
    }
}

std::vector<std::string> split_array_cell(const std::string& raw) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (true) {
        std::size_t sep = raw.find(';', start);
        if (sep == std::string::npos) {
            items.push_back(trim(raw.substr(start)));
            break;
        }
        items.push_back(trim(raw.substr(start, sep - start)));
        start = sep + 1;
    }
    return items;
}

std::string enum_list(const std::vector<std::string>& values) {
    std::string out;
    for (const std::string& v : values) {
        if (!out.empty()) out += ", ";
        out += v;
    }
    return out;
}

// Coerces one non-empty cell. Appends issues on failure and leaves the cell
// absent; a cell is present only when it carries a fully valid value.
CellValue coerce_cell(const std::string& raw, const ColumnSpec& col, std::size_t row,
                      std::vector<ValidationIssue>& issues) {
    CellValue cell;
    if (col.type == PropertyKind::Array) {
        ojson array = ojson::array();
        std::vector<std::string> items = split_array_cell(raw);
        for (std::size_t i = 0; i < items.size(); ++i) {
            std::string error;
            auto item = coerce_scalar(items[i], col.item_kind.value_or(PropertyKind::String),
                                      error);
            if (!item) {
                issues.push_back(ValidationIssue::at_cell(
                    IssueCode::TypeMismatch, row, col.header,
                    "array item " + std::to_string(i + 1) + ": " + error));
                return cell;
            }
            array.push_back(std::move(*item));
        }
        cell.value = std::move(array);
        cell.present = true;
        return cell;
    }

    std::string error;
    auto value = coerce_scalar(raw, col.type, error);
    if (!value) {
        issues.push_back(ValidationIssue::at_cell(IssueCode::TypeMismatch, row, col.header,
                                                  std::move(error)));
        return cell;
    }
    bool valid = true;
    if (!col.enum_values.empty() &&
        std::find(col.enum_values.begin(), col.enum_values.end(), raw) ==
            col.enum_values.end()) {
        issues.push_back(ValidationIssue::at_cell(
            IssueCode::EnumViolation, row, col.header,
            "'" + raw + "' is not one of: " + enum_list(col.enum_values)));
        valid = false;
    }
    if (col.format && !value_matches_format(raw, *col.format)) {
        issues.push_back(ValidationIssue::at_cell(
            IssueCode::FormatInvalid, row, col.header,
            "'" + raw + "' is not " + format_hint(*col.format)));
        valid = false;
    }
    if (valid) {
        cell.value = std::move(*value);
        cell.present = true;
    }
    return cell;
}

}  // namespace

BindingResult bind_columns(const std::vector<std::string>& csv_headers,
                           const std::vector<ColumnSpec>& cols) {
    BindingResult result;

    std::vector<std::string> trimmed;
    for (const std::string& h : csv_headers) trimmed.push_back(trim(h));

    std::map<std::string, std::size_t> first_at;
    std::set<std::string> duplicated;
    for (std::size_t i = 0; i < trimmed.size(); ++i) {
        if (!first_at.emplace(trimmed[i], i).second && duplicated.insert(trimmed[i]).second) {
            result.errors.push_back(ValidationIssue::at_cell(
                IssueCode::DuplicateHeader, 0, trimmed[i], "header appears more than once"));
        }
    }

    Binding binding;
    for (const ColumnSpec& col : cols) {
        binding.headers.push_back(col.header);
        auto it = first_at.find(col.header);
        if (it == first_at.end()) {
            result.errors.push_back(ValidationIssue::at_cell(
                IssueCode::MissingColumn, 0, col.header, "column missing from the CSV header"));
            continue;
        }
        binding.spec_to_csv.push_back(it->second);
        binding.header_to_csv[col.header] = it->second;
    }

    std::set<std::string> known(binding.headers.begin(), binding.headers.end());
    for (const std::string& h : trimmed) {
        if (!known.contains(h)) {
            result.warnings.push_back(ValidationIssue::at_cell(
                IssueCode::UnknownColumn, 0, h, "column is not part of the template; ignored"));
        }
    }

    if (result.errors.empty()) result.binding = std::move(binding);
    return result;
}

IngestResult validate_cells(const std::vector<CsvRow>& data_rows, const Binding& binding,
                            const std::vector<ColumnSpec>& cols) {
    IngestResult result;
    result.sheet.binding = binding;

    for (std::size_t i = 0; i < data_rows.size(); ++i) {
        const CsvRow& raw_row = data_rows[i];
        const std::size_t row_number = i + 1;  // row 0 is the header row

        bool any_content = false;
        for (const std::string& cell : raw_row) {
            if (!trim(cell).empty()) {
                any_content = true;
                break;
            }
        }
        if (!any_content) continue;

        RowValues row;
        row.source_row = row_number;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::size_t csv_index = binding.spec_to_csv[c];
            std::string raw =
                csv_index < raw_row.size() ? trim(raw_row[csv_index]) : std::string();
            if (raw.empty()) {
                if (cols[c].required) {
                    result.issues.push_back(ValidationIssue::at_cell(
                        IssueCode::RequiredMissing, row_number, cols[c].header,
                        "required cell is empty"));
                }
                row.cells.emplace_back();
            } else {
                row.cells.push_back(coerce_cell(raw, cols[c], row_number, result.issues));
            }
        }
        result.sheet.rows.push_back(std::move(row));
    }
    result.sheet.row_count = result.sheet.rows.size();
    return result;
}

}  // namespace lei2json
