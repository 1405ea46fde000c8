#include <doctest.h>

#include <random>

#include "lei2json/errors.hpp"
#include "lei2json/template_io.hpp"
#include "lei2json/util.hpp"
#include "random_gen.hpp"
#include "test_support.hpp"

using namespace lei2json;

TEST_CASE("template.csv is a single LF-terminated header row") {
    testsupport::TempDir dir;

    TemplateBundle weight = make_bundle(load_schema(testsupport::fixture("weight.schema.json")));
    write_bundle(weight, dir.path());
    CHECK(read_text_file(dir.file("template.csv")) == "Animal ID,Live Weight,Method\n");

    TemplateBundle dated =
        make_bundle(load_schema(testsupport::fixture("weight_dated.schema.json")));
    write_bundle(dated, dir.path());
    CHECK(read_text_file(dir.file("template.csv")) ==
          "Animal ID,Live Weight,Weigh Date,Method\n");
}

TEST_CASE("headers containing the delimiter are quoted in template.csv") {
    SchemaDocument doc = parse_schema(R"({
        "description": "x",
        "type": "object",
        "properties": {
            "w": {"type": "number", "displayName": "Weight, kg"},
            "method": {"type": "string", "displayName": "Method"}
        }
    })");
    testsupport::TempDir dir;
    write_bundle(make_bundle(doc), dir.path());
    CHECK(read_text_file(dir.file("template.csv")) == "\"Weight, kg\",Method\n");
}

TEST_CASE("write_bundle output is byte-stable across runs") {
    TemplateBundle bundle =
        make_bundle(load_schema(testsupport::fixture("movement.schema.json")));
    testsupport::TempDir a;
    testsupport::TempDir b;
    write_bundle(bundle, a.path());
    write_bundle(bundle, b.path());
    CHECK(read_text_file(a.file("template.csv")) == read_text_file(b.file("template.csv")));
    CHECK(read_text_file(a.file("lei-template.json")) ==
          read_text_file(b.file("lei-template.json")));
}

TEST_CASE("bundles round trip through disk unchanged") {
    for (const char* name : {"weight.schema.json", "weight_dated.schema.json",
                             "movement.schema.json"}) {
        TemplateBundle bundle = make_bundle(load_schema(testsupport::fixture(name)));
        testsupport::TempDir dir;
        write_bundle(bundle, dir.path());
        CHECK(read_bundle(dir.path()) == bundle);
    }

    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        std::mt19937_64 rng(seed);
        SchemaDocument doc = parse_schema(testsupport::random_schema(rng).dump());
        TemplateBundle bundle = make_bundle(doc);
        testsupport::TempDir dir;
        write_bundle(bundle, dir.path());
        CHECK(read_bundle(dir.path()) == bundle);
    }
}

TEST_CASE("read_bundle failure modes carry the expected error codes") {
    TemplateBundle bundle = make_bundle(load_schema(testsupport::fixture("weight.schema.json")));

    SUBCASE("missing files") {
        testsupport::TempDir dir;
        try {
            read_bundle(dir.path());
            FAIL("expected a LeiError");
        } catch (const LeiError& e) {
            CHECK(e.code() == ErrorCode::IoError);
        }
    }

    SUBCASE("csv header differs from the manifest") {
        testsupport::TempDir dir;
        write_bundle(bundle, dir.path());
        write_text_file(dir.file("template.csv"), "Animal ID,Wrong,Method\n");
        try {
            read_bundle(dir.path());
            FAIL("expected a LeiError");
        } catch (const LeiError& e) {
            CHECK(e.code() == ErrorCode::ManifestMismatch);
        }
    }

    SUBCASE("reordered csv header is a mismatch too") {
        testsupport::TempDir dir;
        write_bundle(bundle, dir.path());
        write_text_file(dir.file("template.csv"), "Live Weight,Animal ID,Method\n");
        CHECK_THROWS_AS(read_bundle(dir.path()), LeiError);
    }

    SUBCASE("malformed manifest json") {
        testsupport::TempDir dir;
        write_bundle(bundle, dir.path());
        write_text_file(dir.file("lei-template.json"), "{ nope");
        try {
            read_bundle(dir.path());
            FAIL("expected a LeiError");
        } catch (const LeiError& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }

    SUBCASE("manifest missing a required key") {
        testsupport::TempDir dir;
        write_bundle(bundle, dir.path());
        ojson manifest = ojson::parse(read_text_file(dir.file("lei-template.json")));
        manifest.erase("rowTemplate");
        write_text_file(dir.file("lei-template.json"), manifest.dump(2));
        try {
            read_bundle(dir.path());
            FAIL("expected a LeiError");
        } catch (const LeiError& e) {
            CHECK(e.code() == ErrorCode::ManifestMismatch);
        }
    }

    SUBCASE("column with a bad type") {
        testsupport::TempDir dir;
        write_bundle(bundle, dir.path());
        ojson manifest = ojson::parse(read_text_file(dir.file("lei-template.json")));
        manifest["columns"][0]["type"] = "object";
        write_text_file(dir.file("lei-template.json"), manifest.dump(2));
        CHECK_THROWS_AS(read_bundle(dir.path()), LeiError);
    }
}
