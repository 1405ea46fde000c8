#pragma once

#include <json.hpp>

namespace lei2json {

// Order-preserving JSON is used across the whole pipeline: schema property
// order drives column order, and template key order drives output key order.
using ojson = nlohmann::ordered_json;

}  // namespace lei2json
