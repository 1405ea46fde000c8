#include "lei2json/util.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "lei2json/errors.hpp"

namespace lei2json {

std::string trim(std::string_view s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return std::string(s.substr(begin, end - begin));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LeiError(ErrorCode::IoError, "cannot read '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw LeiError(ErrorCode::IoError, "read failed for '" + path.string() + "'");
    }
    std::string text = std::move(buf).str();
    if (text.size() >= 3 && text[0] == '\xEF' && text[1] == '\xBB' && text[2] == '\xBF') {
        text.erase(0, 3);
    }
    return text;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw LeiError(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw LeiError(ErrorCode::IoError, "write failed for '" + path.string() + "'");
    }
}

}  // namespace lei2json
