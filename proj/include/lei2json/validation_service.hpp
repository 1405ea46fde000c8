#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lei2json/schema_model.hpp"

namespace httplib {
class Server;
}

namespace lei2json {

struct ServiceConfig {
    std::string host = "0.0.0.0";
    int port = 8080;
    std::filesystem::path schema_dir;
    std::size_t max_body_bytes = 16ull * 1024 * 1024;
};

/// Stateless HTTP validation endpoint. All *.json files in schema_dir are
/// preloaded at construction and named by file stem; schema documents are
/// immutable afterwards, so concurrent requests share them freely.
///
/// Routes:
///   POST /validate?schema=NAME   body: JSON event array
///        200 {"valid":true,"issues":[]}    when valid
///        422 full issue report             when invalid
///        400 malformed JSON body / body not an array
///        404 unknown schema name
///        413 body over the size limit
///   GET  /health
///        200 {"schemas":[...]} (lexicographic)
class ValidationService {
  public:
    /// Throws LeiError(IoError) when schema_dir is unreadable or contains no
    /// loadable schema. Files that fail to load are skipped with a note.
    explicit ValidationService(ServiceConfig config);
    ~ValidationService();

    ValidationService(const ValidationService&) = delete;
    ValidationService& operator=(const ValidationService&) = delete;

    const std::vector<std::string>& schema_names() const { return names_; }
    const std::vector<std::string>& startup_notes() const { return notes_; }

    /// Binds to an ephemeral port on 127.0.0.1 (for tests); returns the port.
    int bind_any();
    /// Serves until stop(); binds to the configured host/port first unless
    /// bind_any() was already called.
    bool serve();
    void stop();

  private:
    ServiceConfig config_;
    std::map<std::string, SchemaDocument> schemas_;
    std::vector<std::string> names_;
    std::vector<std::string> notes_;
    std::unique_ptr<httplib::Server> server_;
    bool bound_ = false;
};

}  // namespace lei2json
