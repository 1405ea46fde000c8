#include "lei2json/validation_service.hpp"

#include <httplib.h>

#include <algorithm>

#include "lei2json/errors.hpp"
#include "lei2json/ojson.hpp"
#include "lei2json/schema_validator.hpp"

namespace lei2json {

namespace {

void send_json(httplib::Response& res, int status, const ojson& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& message) {
    ojson body = ojson::object();
    body["error"] = message;
    send_json(res, status, body);
}

}  // namespace

ValidationService::ValidationService(ServiceConfig config) : config_(std::move(config)) {
    std::error_code ec;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(config_.schema_dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    if (ec) {
        throw LeiError(ErrorCode::IoError,
                       "cannot read schema directory '" + config_.schema_dir.string() +
                           "': " + ec.message());
    }
    std::sort(files.begin(), files.end());

    for (const auto& path : files) {
        try {
            schemas_.emplace(path.stem().string(), load_schema(path));
        } catch (const LeiError& e) {
            notes_.push_back("skipped '" + path.string() + "': " + e.what());
        }
    }
    if (schemas_.empty()) {
        throw LeiError(ErrorCode::IoError,
                       "no loadable schema in '" + config_.schema_dir.string() + "'");
    }
    for (const auto& [name, doc] : schemas_) names_.push_back(name);

    server_ = std::make_unique<httplib::Server>();
    server_->set_payload_max_length(config_.max_body_bytes);

    server_->Get("/health", [this](const httplib::Request&, httplib::Response& res) {
        ojson body = ojson::object();
        body["schemas"] = names_;
        send_json(res, 200, body);
    });

    server_->Post("/validate", [this](const httplib::Request& req, httplib::Response& res) {
        std::string name = req.get_param_value("schema");
        if (name.empty()) {
            send_error(res, 400, "missing 'schema' query parameter");
            return;
        }
        auto it = schemas_.find(name);
        if (it == schemas_.end()) {
            send_error(res, 404, "unknown schema '" + name + "'");
            return;
        }
        ojson events;
        try {
            events = ojson::parse(req.body);
        } catch (const nlohmann::json::parse_error& e) {
            send_error(res, 400, std::string("malformed JSON body: ") + e.what());
            return;
        }
        if (!events.is_array()) {
            send_error(res, 400, "body must be a JSON array of events");
            return;
        }
        ValidationReport report = validate_events(events, it->second);
        send_json(res, report.valid ? 200 : 422, report_to_json(report));
    });
}

ValidationService::~ValidationService() {
    if (server_) server_->stop();
}

int ValidationService::bind_any() {
    int port = server_->bind_to_any_port("127.0.0.1");
    bound_ = port > 0;
    return port;
}

bool ValidationService::serve() {
    if (!bound_) {
        if (!server_->bind_to_port(config_.host, config_.port)) return false;
        bound_ = true;
    }
    return server_->listen_after_bind();
}

void ValidationService::stop() {
    server_->stop();
}

}  // namespace lei2json
