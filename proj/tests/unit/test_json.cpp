#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "umq/json_io.hpp"

using namespace umq;
using umqtest::error_code_of;

namespace {

Json load_fixture(const std::string& name) {
    return load_json_file(std::string(UMQ_FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("space JSON round trip is a fixed point") {
    const Json j = load_fixture("X4.json");
    const Space s = parse_space_json(j);
    CHECK(space_to_json(s) == j);
    const Space again = parse_space_json(space_to_json(s));
    CHECK(space_to_json(again) == j);
}

TEST_CASE("space JSON rejects non-canonical rationals with the cell named") {
    const Json j = load_fixture("bad_rational.json");
    try {
        parse_space_json(j);
        FAIL("expected FormatError");
    } catch (const Error& e) {
        CHECK(e.code() == "FormatError");
        CHECK(std::string(e.what()).find("matrix[0][1]") != std::string::npos);
    }
}

TEST_CASE("space JSON shape diagnostics") {
    CHECK(error_code_of([] { parse_space_json(Json::array()); }) == "FormatError");
    CHECK(error_code_of([] { parse_space_json(Json{{"points", Json::array()}}); }) ==
          "FormatError");
    Json j;
    j["points"] = Json::array({"a", "b"});
    j["matrix"] = Json::array({Json::array({"0", "1"})});
    CHECK(error_code_of([&] { parse_space_json(j); }) == "FormatError");
    Json numeric;
    numeric["points"] = Json::array({"a"});
    numeric["matrix"] = Json::array({Json::array({0})});
    CHECK(error_code_of([&] { parse_space_json(numeric); }) == "FormatError");
}

TEST_CASE("tree JSON: fixtures parse, canonical emission is stable") {
    const Json fixture = load_fixture("tree_X3.json");
    const RepresentingTree parsed = tree_from_json(fixture);
    CHECK(tree_to_json(parsed) == fixture);

    const RepresentingTree built = RepresentingTree::build(umqtest::x3());
    CHECK(tree_to_json(built) == fixture);

    // children given in any order parse to the same shape
    Json swapped;
    swapped["label"] = "2";
    Json cherry;
    cherry["label"] = "1";
    cherry["children"] = Json::array({Json{{"label", "0"}, {"point", "p0"}},
                                      Json{{"label", "0"}, {"point", "p1"}}});
    swapped["children"] = Json::array({Json{{"label", "0"}, {"point", "p2"}}, cherry});
    const RepresentingTree reordered = tree_from_json(swapped);
    CHECK(rooted_tree_isomorphic(parsed, reordered).has_value());
    CHECK(tree_to_json(reordered) == swapped);  // appearance order defines the point order
}

TEST_CASE("tree JSON diagnostics") {
    Json leafless;
    leafless["label"] = "2";
    CHECK(error_code_of([&] { tree_from_json(leafless); }) == "FormatError");
    Json both;
    both["label"] = "0";
    both["point"] = "a";
    both["children"] = Json::array();
    CHECK(error_code_of([&] { tree_from_json(both); }) == "FormatError");
    Json bad_label;
    bad_label["label"] = "2/4";
    bad_label["point"] = "a";
    CHECK(error_code_of([&] { tree_from_json(bad_label); }) == "FormatError");
}

TEST_CASE("mapping JSON") {
    const auto pairs = parse_mapping_json(load_fixture("map_X4_Y4.json"));
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0] == std::pair<std::string, std::string>{"p0", "q0"});
    CHECK(mapping_to_json(pairs)["pairs"].size() == 4);

    Json dup;
    dup["pairs"] = Json::array({Json::array({"p0", "q0"}), Json::array({"p0", "q1"}),
                                Json::array({"p2", "q2"}), Json::array({"p3", "q3"})});
    const Space x4 = umqtest::x4();
    const Space y4 = umqtest::y4();
    CHECK(error_code_of([&] {
              PointMap::between(x4, y4, parse_mapping_json(dup));
          }) == "NotBijective");
}

TEST_CASE("ballean and envelope serialization") {
    const Space x3 = umqtest::x3();
    const Json balls = ballean_to_json(x3, enumerate_ballean(x3));
    REQUIRE(balls["balls"].size() == 5);
    CHECK(balls["balls"][3]["points"] == Json::array({"p0", "p1"}));
    CHECK(balls["balls"][3]["diameter"] == "1");

    const Json env = envelope_to_json(envelope(x3, x3, PointMap::identity(x3, x3)));
    REQUIRE(env.size() == 3);
    CHECK(env[0]["t"] == "1/2");
    CHECK(env[0]["r"] == "1/2");
    CHECK(env[2]["t"] == "2");
}

TEST_CASE("generator config JSON round trip") {
    GenConfig config;
    config.seed = 99;
    config.n = 6;
    config.max_depth = 2;
    config.labels = {Rational(5), Rational(1, 2)};
    config.branch_min = 2;
    config.branch_max = 3;
    const GenConfig back = parse_gen_config_json(gen_config_to_json(config));
    CHECK(back.seed == 99);
    CHECK(back.n == 6);
    CHECK(back.max_depth == 2);
    CHECK(back.labels == config.labels);
    CHECK(back.branch_max == 3);
}

TEST_CASE("missing files raise IoError") {
    CHECK(error_code_of([] { load_json_file("/nonexistent/nope.json"); }) == "IoError");
}
