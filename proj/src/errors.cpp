#include "lei2json/errors.hpp"

namespace lei2json {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::NotObjectRoot: return "NOT_OBJECT_ROOT";
        case ErrorCode::MissingEventName: return "MISSING_EVENT_NAME";
        case ErrorCode::UnsupportedStructure: return "UNSUPPORTED_STRUCTURE";
        case ErrorCode::DuplicateHeader: return "DUPLICATE_HEADER";
        case ErrorCode::IoError: return "IO_ERROR";
        case ErrorCode::ManifestMismatch: return "MANIFEST_MISMATCH";
        case ErrorCode::PreconditionViolation: return "PRECONDITION_VIOLATION";
        case ErrorCode::InputNotArray: return "INPUT_NOT_ARRAY";
        case ErrorCode::UsageError: return "USAGE_ERROR";
    }
    return "UNKNOWN";
}

}  // namespace lei2json
