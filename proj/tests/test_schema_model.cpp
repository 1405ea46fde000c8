#include <doctest.h>

#include <functional>
#include <random>

#include "lei2json/errors.hpp"
#include "lei2json/schema_model.hpp"
#include "random_gen.hpp"
#include "test_support.hpp"

using namespace lei2json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const LeiError& e) {
        return e.code();
    }
    FAIL("expected a LeiError");
    return ErrorCode::UsageError;
}

void check_no_object_leaf(const PropertyNode& node) {
    for (const PropertyNode& child : node.children) {
        if (child.kind == PropertyKind::Object) {
            check_no_object_leaf(child);
        } else {
            CHECK(child.children.empty());
            if (child.kind == PropertyKind::Array) {
                REQUIRE(child.item_kind.has_value());
                CHECK(*child.item_kind != PropertyKind::Object);
                CHECK(*child.item_kind != PropertyKind::Array);
            } else {
                CHECK_FALSE(child.item_kind.has_value());
            }
        }
    }
}

}  // namespace

TEST_CASE("weight schema loads with names, kinds, and required flags") {
    SchemaDocument doc = load_schema(testsupport::fixture("weight.schema.json"));
    CHECK(doc.event_name == "weight");
    CHECK(doc.warnings.empty());
    REQUIRE(doc.root.children.size() == 3);

    const PropertyNode& animal = doc.root.children[0];
    CHECK(animal.name == "animalId");
    CHECK(animal.kind == PropertyKind::String);
    CHECK(animal.display_name == "Animal ID");
    CHECK(animal.description == "NLIS identifier of the animal being weighed");
    CHECK(animal.required);

    const PropertyNode& weight = doc.root.children[1];
    CHECK(weight.name == "weight");
    CHECK(weight.kind == PropertyKind::Number);
    CHECK(weight.required);

    const PropertyNode& method = doc.root.children[2];
    CHECK(method.name == "method");
    CHECK(method.kind == PropertyKind::String);
    CHECK(method.enum_values == std::vector<std::string>{"scale", "estimate"});
    CHECK_FALSE(method.required);
}

TEST_CASE("movement schema loads nested objects and a string array") {
    SchemaDocument doc = load_schema(testsupport::fixture("movement.schema.json"));
    CHECK(doc.event_name == "movement");
    REQUIRE(doc.root.children.size() == 4);

    const PropertyNode& origin = doc.root.children[1];
    CHECK(origin.kind == PropertyKind::Object);
    CHECK(origin.required);
    REQUIRE(origin.children.size() == 2);
    CHECK(origin.children[0].name == "pic");
    CHECK(origin.children[0].required);
    CHECK(origin.children[1].name == "departed");
    CHECK(origin.children[1].format == ValueFormat::DateTime);
    CHECK_FALSE(origin.children[1].required);

    const PropertyNode& tags = doc.root.children[3];
    CHECK(tags.kind == PropertyKind::Array);
    CHECK(tags.item_kind == PropertyKind::String);
    CHECK_FALSE(tags.required);
}

TEST_CASE("type is inferred as object when properties are present") {
    SchemaDocument doc = parse_schema(R"({
        "description": "x",
        "properties": {"a": {"type": "string"}}
    })");
    CHECK(doc.root.kind == PropertyKind::Object);
    REQUIRE(doc.root.children.size() == 1);
}

TEST_CASE("an empty properties object is loadable and has no children") {
    SchemaDocument doc = parse_schema(R"({"description":"x","type":"object","properties":{}})");
    CHECK(doc.event_name == "x");
    CHECK(doc.root.children.empty());
}

TEST_CASE("unsupported keywords warn once per occurrence and are ignored") {
    SchemaDocument doc = parse_schema(R"({
        "description": "x",
        "type": "object",
        "title": "ignored",
        "$schema": "http://example.com",
        "properties": {
            "a": {"type": "number", "minimum": 5},
            "b": {"type": "number", "minimum": 0}
        }
    })");
    REQUIRE(doc.warnings.size() == 4);
    int minimum_count = 0;
    for (const std::string& w : doc.warnings) {
        if (w.find("'minimum'") != std::string::npos) ++minimum_count;
    }
    CHECK(minimum_count == 2);
    CHECK(doc.root.children.size() == 2);
}

TEST_CASE("misplaced supported keywords warn and are ignored") {
    SchemaDocument doc = parse_schema(R"({
        "description": "x",
        "type": "object",
        "properties": {
            "a": {"type": "number", "enum": [1, 2]},
            "b": {"type": "integer", "format": "date"},
            "c": {"type": "string", "format": "uuid"},
            "d": {"type": "string", "enum": ["dup", "dup"]}
        }
    })");
    CHECK(doc.warnings.size() == 4);
    CHECK(doc.root.children[0].enum_values.empty());
    CHECK_FALSE(doc.root.children[1].format.has_value());
    CHECK_FALSE(doc.root.children[2].format.has_value());
    CHECK(doc.root.children[3].enum_values.empty());
}

TEST_CASE("a required entry naming an unknown property is ignored") {
    SchemaDocument doc = parse_schema(R"({
        "description": "x",
        "type": "object",
        "properties": {"a": {"type": "string"}},
        "required": ["a", "ghost"]
    })");
    REQUIRE(doc.root.children.size() == 1);
    CHECK(doc.root.children[0].required);
}

TEST_CASE("loader failure modes carry the expected error codes") {
    CHECK(code_of([] { parse_schema("{ not json"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_schema("[1,2]"); }) == ErrorCode::NotObjectRoot);
    CHECK(code_of([] { parse_schema(R"({"description":"x","type":"string"})"); }) ==
          ErrorCode::NotObjectRoot);
    CHECK(code_of([] { parse_schema(R"({"type":"object","properties":{}})"); }) ==
          ErrorCode::MissingEventName);
    CHECK(code_of([] { parse_schema(R"({"description":"  ","type":"object","properties":{}})"); }) ==
          ErrorCode::MissingEventName);
    CHECK(code_of([] { parse_schema(R"({"description":5,"type":"object","properties":{}})"); }) ==
          ErrorCode::MissingEventName);
    // array of objects
    CHECK(code_of([] {
              parse_schema(R"({"description":"x","type":"object",
                  "properties":{"a":{"type":"array","items":{"type":"object"}}}})");
          }) == ErrorCode::UnsupportedStructure);
    // nested arrays
    CHECK(code_of([] {
              parse_schema(R"({"description":"x","type":"object",
                  "properties":{"a":{"type":"array","items":{"type":"array"}}}})");
          }) == ErrorCode::UnsupportedStructure);
    // array without items
    CHECK(code_of([] {
              parse_schema(R"({"description":"x","type":"object",
                  "properties":{"a":{"type":"array"}}})");
          }) == ErrorCode::UnsupportedStructure);
    // untyped property
    CHECK(code_of([] {
              parse_schema(R"({"description":"x","type":"object",
                  "properties":{"a":{"displayName":"A"}}})");
          }) == ErrorCode::UnsupportedStructure);
    // union / unknown type names
    CHECK(code_of([] {
              parse_schema(R"({"description":"x","type":"object",
                  "properties":{"a":{"type":["string","null"]}}})");
          }) == ErrorCode::UnsupportedStructure);
    CHECK(code_of([] {
              parse_schema(R"({"description":"x","type":"object",
                  "properties":{"a":{"type":"null"}}})");
          }) == ErrorCode::UnsupportedStructure);
    CHECK(code_of([] { load_schema("/nonexistent/path/schema.json"); }) == ErrorCode::IoError);
}

TEST_CASE("random schemas load deterministically with sound leaf shapes") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        std::mt19937_64 rng(seed);
        std::string text = testsupport::random_schema(rng).dump(2);
        SchemaDocument first = parse_schema(text);
        SchemaDocument second = parse_schema(text);
        CHECK(first == second);
        CHECK_FALSE(first.event_name.empty());
        CHECK(first.warnings.empty());
        check_no_object_leaf(first.root);
    }
}
