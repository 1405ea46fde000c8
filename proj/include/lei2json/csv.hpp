#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lei2json {

using CsvRow = std::vector<std::string>;

/// RFC 4180 parser. Accepts LF, CRLF, and lone-CR row endings; quoted fields
/// may contain the delimiter, doubled quotes, and embedded line breaks.
/// Lenient about a missing final newline and an unterminated quote at EOF.
std::vector<CsvRow> parse_csv(std::string_view text, char delimiter = ',');

/// Formats one row with minimal RFC 4180 quoting and an LF terminator.
std::string format_csv_row(const CsvRow& fields, char delimiter = ',');

}  // namespace lei2json
