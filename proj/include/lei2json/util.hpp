#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace lei2json {

/// Strips ASCII whitespace from both ends.
std::string trim(std::string_view s);

std::string to_lower(std::string_view s);

/// Reads a whole file as UTF-8 text, dropping a leading BOM if present.
/// Throws LeiError(IoError) when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

/// Throws LeiError(IoError) when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace lei2json
