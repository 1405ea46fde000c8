#pragma once

#include <stdexcept>
#include <string>

namespace lei2json {

enum class ErrorCode {
    ParseError,            // malformed JSON text
    NotObjectRoot,         // schema top level is not an object type
    MissingEventName,      // schema has no (or an empty) top-level description
    UnsupportedStructure,  // e.g. array-of-objects property, untyped property
    DuplicateHeader,       // two leaves flatten to the same column header
    IoError,               // unreadable/unwritable file
    ManifestMismatch,      // template.csv headers differ from the manifest
    PreconditionViolation, // API misuse (e.g. generating from rows with issues)
    InputNotArray,         // validation input is not a JSON array
    UsageError,            // bad flags or malformed auxiliary inputs
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a stable error code alongside the human message.
class LeiError : public std::runtime_error {
  public:
    LeiError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace lei2json
