#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "anticyc/json_io.hpp"
#include "anticyc/scenarios.hpp"

using namespace anticyc;

TEST_CASE("class round trip, including big coordinates") {
    LatticeClass x{3, -1, -1, 0};
    CHECK(class_from_json(class_to_json(x)) == x);
    LatticeClass big{std::vector<Int>{Int("123456789012345678901234567890"), Int(-1)}};
    CHECK(class_from_json(class_to_json(big)) == big);
    CHECK_THROWS(class_from_json(json::parse("[1, 2]"), 4));
    CHECK_THROWS(class_from_json(json::parse("{\"a\": 1}")));
    CHECK_THROWS(class_from_json(json::parse("[1, 2.5]")));
}

TEST_CASE("pair round trip with history replay") {
    Scenario s = build_scenario("family_kN", {2, 2});
    json j = pair_to_json(s.pair);
    CyclePair back = pair_from_json(j);
    CHECK(back.n == s.pair.n);
    CHECK(back.components == s.pair.components);
    CHECK(back.declared_minus_two == s.pair.declared_minus_two);
    CHECK(back.history.size() == s.pair.history.size());
}

TEST_CASE("tampered history is rejected") {
    Scenario s = build_scenario("nodal_cubic_N", {10});
    json j = pair_to_json(s.pair);
    j["history"][0]["op"] = "corner";
    CHECK_THROWS(pair_from_json(j));
    json k = pair_to_json(s.pair);
    k["components"][0][1] = 7;
    CHECK_THROWS(pair_from_json(k));
}

TEST_CASE("pairs without history load on validation alone") {
    json j;
    j["n"] = 0;
    j["components"] = json::array({json::array({3})});
    CyclePair p = pair_from_json(j);
    CHECK(p.r() == 1);
    j["components"] = json::array({json::array({2})});
    CHECK_THROWS(pair_from_json(j));
}

TEST_CASE("isometry parsing enforces the pairing") {
    json good = json::parse("[[1,0],[0,1]]");
    IntegerIsometry f = isometry_from_json(good);
    CHECK(f.dim() == 2);
    CHECK_THROWS(isometry_from_json(json::parse("[[1,1],[0,1]]")));
    CHECK_THROWS(isometry_from_json(json::parse("[[1,0]]")));
}

TEST_CASE("inline class argument forms") {
    CHECK(parse_class_arg("3,-1,-1", 3) == LatticeClass{3, -1, -1});
    CHECK(parse_class_arg("[3,-1,-1]", 3) == LatticeClass{3, -1, -1});
    CHECK_THROWS(parse_class_arg("3,-1", 3));
    CHECK_THROWS(parse_class_arg("3,,1", 3));
}

TEST_CASE("file round trip") {
    Scenario s = build_scenario("ex43");
    std::string path = "test_pair_roundtrip.json";
    save_pair(s.pair, path);
    CyclePair back = load_pair(path);
    CHECK(back.components == s.pair.components);
    std::remove(path.c_str());
}
