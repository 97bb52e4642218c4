#include <doctest.h>

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include "resmax/errors.hpp"
#include "resmax/functions.hpp"
#include "resmax/instance_io.hpp"
#include "resmax/subset.hpp"
#include "testers.hpp"

using namespace resmax;

#ifndef RESMAX_TEST_DATA_DIR
#error "RESMAX_TEST_DATA_DIR must point at the test fixture directory"
#endif

namespace {

std::string data_path(const std::string& name) {
    return std::string(RESMAX_TEST_DATA_DIR) + "/" + name;
}

/// Compares two oracles on every subset of their shared universe.
void check_same_function(const ObjectiveOracle& a, const ObjectiveOracle& b) {
    REQUIRE(a.ground_size() == b.ground_size());
    const int m = a.ground_size();
    REQUIRE(m <= 16);
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        Subset s = testutil::subset_from_mask(mask, m);
        CHECK(a.evaluate(s) == b.evaluate(s));
    }
}

}  // namespace

TEST_SUITE("instance_io") {

TEST_CASE("modular instances parse to the same values") {
    auto parsed = parse_instance(
        R"({"type":"modular","weights":[1.5,0.25,3.0]})");
    ModularFunction direct({1.5, 0.25, 3.0});
    check_same_function(*parsed, direct);
}

TEST_CASE("tabular instances parse to the same values") {
    auto parsed = parse_instance(R"({
        "type": "tabular",
        "m": 2,
        "values": {"{}": 0.0, "{0}": 2.0, "{1}": 1.0, "{0,1}": 2.5}
    })");
    TabularFunction direct(2, {0.0, 2.0, 1.0, 2.5});
    check_same_function(*parsed, direct);
}

TEST_CASE("coverage instances parse to the same values") {
    auto parsed = parse_instance(R"({
        "type": "coverage",
        "universe_weights": [1.0, 2.0, 4.0],
        "covers": [[0, 1], [1], [2]]
    })");
    WeightedCoverageFunction direct({1.0, 2.0, 4.0}, {{0, 1}, {1}, {2}});
    check_same_function(*parsed, direct);
}

TEST_CASE("logdet instances parse to the same values") {
    auto parsed = parse_instance(R"({
        "type": "logdet",
        "d": 2,
        "matrices": [[[2.0, 0.5], [0.5, 1.0]], [[1.0, 0.0], [0.0, 3.0]]]
    })");
    DenseMatrix first(2), second(2);
    first.at(0, 0) = 2.0; first.at(0, 1) = 0.5;
    first.at(1, 0) = 0.5; first.at(1, 1) = 1.0;
    second.at(0, 0) = 1.0; second.at(1, 1) = 3.0;
    LogDetFunction direct({first, second});
    check_same_function(*parsed, direct);
}

TEST_CASE("seeded logdet instances match the generator") {
    auto parsed = parse_instance(
        R"({"type":"logdet_random","m":5,"d":4,"seed":97})");
    LogDetFunction direct = random_psd_instance(5, 4, 97);
    check_same_function(*parsed, direct);
}

TEST_CASE("the bundled fixture matches the built-in example") {
    auto parsed = load_instance(data_path("example1.json"));
    TabularFunction direct = make_example1_function(1.0);
    check_same_function(*parsed, direct);
}

TEST_CASE("unknown types name the offender") {
    try {
        parse_instance(R"({"type":"mystery","weights":[1.0]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("mystery") != std::string::npos);
    }
}

TEST_CASE("structural problems raise parse errors") {
    CHECK_THROWS_AS(parse_instance("not json at all"), ParseError);
    CHECK_THROWS_AS(parse_instance("{}"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"type":"modular"})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"type":"modular","weights":"abc"})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_instance(R"({"type":"tabular","m":2,"values":{"{}":0.0}})"),
        ParseError);
    // Two spellings of the same subset are a duplicate, not a pair.
    CHECK_THROWS_AS(parse_instance(R"({
        "type": "tabular",
        "m": 1,
        "values": {"{}": 0.0, "{0}": 1.0, "{ 0 }": 1.0}
    })"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"type":"logdet_random","m":5,"d":4,"seed":-3})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_instance(R"({"type":"logdet_random","m":5,"d":4})"),
        ParseError);
}

TEST_CASE("semantic problems raise domain errors") {
    CHECK_THROWS_AS(
        parse_instance(R"({"type":"modular","weights":[1.0,-2.0]})"),
        InvalidInputError);
    // A structurally fine but non-submodular table fails validation.
    CHECK_THROWS_AS(parse_instance(R"({
        "type": "tabular",
        "m": 2,
        "values": {"{}": 0.0, "{0}": 1.0, "{1}": 1.0, "{0,1}": 3.0}
    })"),
                    InvalidInputError);
    CHECK_THROWS_AS(parse_instance(R"({
        "type": "logdet",
        "d": 1,
        "matrices": [[[-2.0]]]
    })"),
                    InvalidInputError);
}

TEST_CASE("serialized logdet instances round-trip bit for bit") {
    LogDetFunction original = random_psd_instance(4, 3, 20240814);
    std::string text = serialize_logdet_instance(original);
    auto reparsed = parse_instance(text);
    check_same_function(*reparsed, original);
}

TEST_CASE("file helpers round-trip and report missing files") {
    std::string path = "resmax_io_test_scratch.json";
    write_text_file(path, "line one\nline two\n");
    CHECK(read_text_file(path) == "line one\nline two\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file(path), ParseError);
    CHECK_THROWS_AS(load_instance("definitely_missing_instance.json"),
                    ParseError);
}

}  // TEST_SUITE
