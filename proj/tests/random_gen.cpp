#include "random_gen.hpp"

#include <algorithm>

using lei2json::ColumnSpec;
using lei2json::ojson;
using lei2json::PropertyKind;
using lei2json::ValueFormat;

namespace testsupport {

namespace {

constexpr std::size_t kMaxLeaves = 25;
constexpr int kMaxDepth = 3;

struct SchemaBuilder {
    std::mt19937_64& rng;
    std::size_t leaf_budget = kMaxLeaves;
    int name_counter = 0;

    std::string fresh_name() { return "p" + std::to_string(++name_counter); }

    ojson leaf_spec() {
        ojson spec = ojson::object();
        switch (rng() % 5) {
            case 0: {
                spec["type"] = "string";
                std::uint64_t extra = rng() % 4;
                if (extra == 1) {
                    const char* formats[] = {"date", "date-time", "email"};
                    spec["format"] = formats[rng() % 3];
                } else if (extra == 2) {
                    ojson values = ojson::array();
                    std::size_t n = 2 + rng() % 3;
                    for (std::size_t i = 0; i < n; ++i) {
                        values.push_back("e" + std::to_string(++name_counter));
                    }
                    spec["enum"] = std::move(values);
                }
                break;
            }
            case 1: spec["type"] = "number"; break;
            case 2: spec["type"] = "integer"; break;
            case 3: spec["type"] = "boolean"; break;
            case 4: {
                spec["type"] = "array";
                const char* items[] = {"string", "number", "integer", "boolean"};
                spec["items"] = ojson{{"type", items[rng() % 4]}};
                break;
            }
        }
        if (rng() % 2) spec["displayName"] = "P " + std::to_string(name_counter);
        if (rng() % 3 == 0) spec["description"] = "note " + std::to_string(name_counter);
        return spec;
    }

    ojson object_spec(int depth) {
        ojson properties = ojson::object();
        ojson required = ojson::array();

        // First child: a required leaf, so this object always has content.
        std::string first = fresh_name();
        --leaf_budget;
        properties[first] = leaf_spec();
        required.push_back(first);

        std::size_t extra = rng() % 4;
        for (std::size_t i = 0; i < extra && leaf_budget > 0; ++i) {
            std::string name = fresh_name();
            bool make_object = depth < kMaxDepth && leaf_budget >= 2 && rng() % 4 == 0;
            if (make_object) {
                properties[name] = object_spec(depth + 1);
            } else {
                --leaf_budget;
                properties[name] = leaf_spec();
            }
            if (rng() % 2) required.push_back(name);
        }

        ojson spec = ojson::object();
        spec["type"] = "object";
        if (rng() % 2) spec["displayName"] = "G " + std::to_string(name_counter);
        spec["properties"] = std::move(properties);
        spec["required"] = std::move(required);
        return spec;
    }
};

std::string two_digits(std::uint64_t v) {
    return (v < 10 ? "0" : "") + std::to_string(v);
}

std::string valid_scalar(PropertyKind kind, std::mt19937_64& rng) {
    switch (kind) {
        case PropertyKind::Number:
            return std::to_string(rng() % 500) + "." + std::to_string(rng() % 10);
        case PropertyKind::Integer:
            return (rng() % 2 ? "" : "-") + std::to_string(rng() % 100000);
        case PropertyKind::Boolean: return rng() % 2 ? "true" : "false";
        default: return "v" + std::to_string(rng() % 100000);
    }
}

std::string valid_string_cell(const ColumnSpec& col, std::mt19937_64& rng) {
    if (!col.enum_values.empty()) return col.enum_values[rng() % col.enum_values.size()];
    if (col.format) {
        switch (*col.format) {
            case ValueFormat::Date:
                return std::to_string(2000 + rng() % 40) + "-" + two_digits(1 + rng() % 12) +
                       "-" + two_digits(1 + rng() % 28);
            case ValueFormat::DateTime:
                return std::to_string(2000 + rng() % 40) + "-" + two_digits(1 + rng() % 12) +
                       "-" + two_digits(1 + rng() % 28) + "T" + two_digits(rng() % 24) + ":" +
                       two_digits(rng() % 60) + ":" + two_digits(rng() % 60) +
                       (rng() % 2 ? "Z" : "+10:00");
            case ValueFormat::Email:
                return "user" + std::to_string(rng() % 10000) + "@example.com";
        }
    }
    return valid_scalar(PropertyKind::String, rng);
}

ojson junk_value(std::mt19937_64& rng) {
    switch (rng() % 7) {
        case 0: return ojson(nullptr);
        case 1: return ojson(3.5);
        case 2: return ojson("junk");
        case 3: return ojson(true);
        case 4: return ojson::array();
        case 5: return ojson::object();
        default: return ojson(1.0);
    }
}

}  // namespace

ojson random_schema(std::mt19937_64& rng) {
    SchemaBuilder builder{rng};
    ojson schema = builder.object_spec(1);
    ojson out = ojson::object();
    out["description"] = "evt" + std::to_string(rng() % 1000);
    for (const auto& [key, value] : schema.items()) out[key] = value;
    return out;
}

std::vector<std::string> random_row(const std::vector<ColumnSpec>& cols, std::mt19937_64& rng,
                                    bool fill_all) {
    // Gaps are decided per top-level subtree, all or nothing. Emptying an
    // arbitrary nested cell could strand a sibling that is required within
    // its parent object, which is a data error, not a valid sparse row.
    std::vector<bool> skip(cols.size(), false);
    for (std::size_t i = 0; i < cols.size();) {
        std::size_t j = i;
        bool has_required = false;
        while (j < cols.size() && cols[j].path[0] == cols[i].path[0]) {
            has_required = has_required || cols[j].required;
            ++j;
        }
        if (!fill_all && !has_required && rng() % 3 == 0) {
            std::fill(skip.begin() + i, skip.begin() + j, true);
        }
        i = j;
    }

    std::vector<std::string> row;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const ColumnSpec& col = cols[c];
        if (skip[c]) {
            row.emplace_back();
            continue;
        }
        if (col.type == PropertyKind::Array) {
            std::size_t n = 1 + rng() % 3;
            std::string cell;
            for (std::size_t i = 0; i < n; ++i) {
                if (i) cell += ";";
                cell += valid_scalar(col.item_kind.value_or(PropertyKind::String), rng);
            }
            row.push_back(std::move(cell));
        } else if (col.type == PropertyKind::String) {
            row.push_back(valid_string_cell(col, rng));
        } else {
            row.push_back(valid_scalar(col.type, rng));
        }
    }
    return row;
}

ojson mutate_events(const ojson& events, std::mt19937_64& rng) {
    ojson out = events;
    if (out.empty()) return out;
    ojson* node = &out[rng() % out.size()];
    if (!node->is_object() || node->empty() || rng() % 10 == 0) {
        *node = junk_value(rng);
        return out;
    }
    // Walk into nested objects half the time so corruptions also land below
    // the top level of an event.
    auto pick_key = [&rng](ojson& object) {
        auto it = object.begin();
        std::advance(it, static_cast<long>(rng() % object.size()));
        return it.key();
    };
    std::string key = pick_key(*node);
    while ((*node)[key].is_object() && !(*node)[key].empty() && rng() % 2 == 0) {
        node = &(*node)[key];
        key = pick_key(*node);
    }
    switch (rng() % 3) {
        case 0: node->erase(key); break;
        case 1: (*node)[key] = junk_value(rng); break;
        default: (*node)["zz" + std::to_string(rng() % 100)] = junk_value(rng); break;
    }
    return out;
}

}  // namespace testsupport
