#include "lei2json/json_generator.hpp"

#include <map>

#include "lei2json/errors.hpp"
#include "lei2json/formats.hpp"

namespace lei2json {

namespace {

std::string string_field(const ojson& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return {};
    if (!it->is_string()) {
        throw LeiError(ErrorCode::UsageError,
                       std::string("producer '") + key + "' must be a string");
    }
    return it->get<std::string>();
}

// Clones the skeleton for one row, replacing placeholders with the row's
// values. Absent cells drop their key; objects left empty drop too.
ojson fill_skeleton(const ojson& node, const std::map<std::string, const CellValue*>& by_header) {
    ojson out = ojson::object();
    for (const auto& [key, value] : node.items()) {
        if (value.is_object()) {
            ojson child = fill_skeleton(value, by_header);
            if (!child.empty()) out[key] = std::move(child);
        } else {
            auto it = by_header.find(value.get<std::string>());
            if (it != by_header.end() && it->second->present) {
                out[key] = it->second->value;
            }
        }
    }
    return out;
}

ojson producer_to_json(const ProducerInfo& producer) {
    ojson out = ojson::object();
    if (!producer.full_name.empty()) out["name"] = producer.full_name;
    if (!producer.email.empty()) out["email"] = producer.email;
    if (!producer.address.empty()) out["address"] = producer.address;
    if (!producer.phone.empty()) out["phone"] = producer.phone;
    if (!producer.pic.empty()) out["pic"] = producer.pic;
    return out;
}

}  // namespace

ProducerInfo producer_from_json(const ojson& value) {
    if (!value.is_object()) {
        throw LeiError(ErrorCode::UsageError, "producer file must hold a JSON object");
    }
    ProducerInfo producer;
    producer.full_name = string_field(value, "fullName");
    producer.email = string_field(value, "email");
    producer.address = string_field(value, "address");
    producer.phone = string_field(value, "phone");
    if (!producer.email.empty() && !is_valid_email(producer.email)) {
        throw LeiError(ErrorCode::UsageError,
                       "producer email '" + producer.email + "' is not an email address");
    }
    return producer;
}

EventArray parse_to_json(const IngestResult& ingested, const RowTemplate& row_template,
                         const ProducerInfo& producer, const std::string& event_name) {
    if (!ingested.ok()) {
        throw LeiError(ErrorCode::PreconditionViolation,
                       "cannot generate events from a sheet with validation issues");
    }
    EventArray result;
    result.event_name = event_name;

    const ojson producer_json = producer_to_json(producer);
    for (const RowValues& row : ingested.sheet.rows) {
        std::map<std::string, const CellValue*> by_header;
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            by_header[ingested.sheet.binding.headers[i]] = &row.cells[i];
        }
        ojson event = fill_skeleton(row_template.skeleton, by_header);
        event["eventName"] = event_name;
        if (!producer_json.empty()) event["producer"] = producer_json;
        result.events.push_back(std::move(event));
    }
    return result;
}

std::string serialize(const EventArray& events, bool pretty) {
    ojson array = ojson::array();
    for (const ojson& event : events.events) array.push_back(event);
    return pretty ? array.dump(2) : array.dump();
}

ConvertOutcome convert_table(const std::vector<CsvRow>& table, const std::vector<ColumnSpec>& cols,
                             const RowTemplate& row_template, const ProducerInfo& producer,
                             const std::string& event_name) {
    ConvertOutcome outcome;
    outcome.events.event_name = event_name;

    std::vector<std::string> headers = table.empty() ? std::vector<std::string>{} : table.front();
    BindingResult binding = bind_columns(headers, cols);
    outcome.warnings = binding.warnings;
    if (!binding.ok()) {
        outcome.issues = binding.errors;
        return outcome;
    }

    std::vector<CsvRow> data_rows(table.begin() + (table.empty() ? 0 : 1), table.end());
    IngestResult ingested = validate_cells(data_rows, *binding.binding, cols);
    if (!ingested.ok()) {
        outcome.issues = ingested.issues;
        return outcome;
    }
    outcome.events = parse_to_json(ingested, row_template, producer, event_name);
    return outcome;
}

}  // namespace lei2json
