#include "lei2json/csv.hpp"

namespace lei2json {

std::vector<CsvRow> parse_csv(std::string_view text, char delimiter) {
    std::vector<CsvRow> rows;
    CsvRow row;
    std::string field;
    bool in_quotes = false;
    bool row_started = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        row_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"' && field.empty()) {
            in_quotes = true;
            row_started = true;
        } else if (c == delimiter) {
            end_field();
            row_started = true;
        } else if (c == '\n') {
            end_row();
        } else if (c == '\r') {
            if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
            end_row();
        } else {
            field += c;
            row_started = true;
        }
    }
    if (row_started || !field.empty() || !row.empty()) {
        end_row();
    }
    return rows;
}

std::string format_csv_row(const CsvRow& fields, char delimiter) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += delimiter;
        const std::string& f = fields[i];
        bool needs_quotes = f.find(delimiter) != std::string::npos ||
                            f.find('"') != std::string::npos ||
                            f.find('\n') != std::string::npos || f.find('\r') != std::string::npos;
        if (needs_quotes) {
            out += '"';
            for (char c : f) {
                if (c == '"') out += '"';
                out += c;
            }
            out += '"';
        } else {
            out += f;
        }
    }
    out += '\n';
    return out;
}

}  // namespace lei2json
