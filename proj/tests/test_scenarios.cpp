#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "anticyc/scenarios.hpp"

using namespace anticyc;

namespace {

void expect_all_pass(const VerifyReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(rep.scenario << ": " << c.label << " expected " << c.expected << " got "
                          << c.actual);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
}

}  // namespace

TEST_CASE("scenario registry") {
    auto names = scenario_names();
    CHECK(names.size() == 6);
    CHECK_THROWS(build_scenario("unknown"));
    CHECK_THROWS(build_scenario("nodal_cubic_N", {9}));     // N >= 10
    CHECK_THROWS(build_scenario("family_kN", {1, 3}));      // k >= 2
    CHECK_THROWS(build_scenario("family_kN", {3, 0}));      // N >= 1
    CHECK_THROWS(build_scenario("remark45_n", {-1}));       // n >= 0
    CHECK_THROWS(build_scenario("ex42", {1}));              // no parameters
}

TEST_CASE("every built scenario validates") {
    CHECK(validate(build_scenario("nodal_cubic_N", {12}).pair).empty());
    CHECK(validate(build_scenario("duval_10").pair).empty());
    CHECK(validate(build_scenario("family_kN", {4, 2}).pair).empty());
    CHECK(validate(build_scenario("ex42").pair).empty());
    CHECK(validate(build_scenario("ex43").pair).empty());
    CHECK(validate(build_scenario("remark45_n", {0}).pair).empty());
}

TEST_CASE("named classes satisfy their defining pairings") {
    Scenario e42 = build_scenario("ex42");
    CHECK(pairing(e42.named.at("G1"), e42.named.at("G1")) == 2);
    CHECK(pairing(e42.named.at("G2"), e42.named.at("G2")) == -22);
    CHECK(pairing(e42.named.at("Ghat1"), e42.named.at("Ghat1")) == 10);

    Scenario e43 = build_scenario("ex43");
    CHECK(pairing(e43.named.at("Eprime"), e43.named.at("Eprime")) == -1);
    CHECK(pairing(e43.named.at("Eprime"), canonical_class(11)) == -1);
    CHECK(pairing(e43.named.at("beta"), e43.named.at("beta")) == -2);

    Scenario nc = build_scenario("nodal_cubic_N", {11});
    CHECK(pairing(nc.named.at("f"), nc.named.at("f")) == 0);
    CHECK(pairing(nc.named.at("alpha"), nc.named.at("alpha")) == -1);
}

TEST_CASE("verification batteries all pass") {
    expect_all_pass(verify_scenario("ex42"));
    expect_all_pass(verify_scenario("ex43"));
    expect_all_pass(verify_scenario("nodal_cubic_N", {11}));
    expect_all_pass(verify_scenario("duval_10"));
    expect_all_pass(verify_scenario("family_kN", {6, 3}));
    expect_all_pass(verify_scenario("remark45_n", {3}));
}

TEST_CASE("remark45 identity holds across the stated range") {
    for (long n = 0; n <= 20; ++n) {
        Scenario s = build_scenario("remark45_n", {n});
        const LatticeClass& a = s.named.at("A");
        CHECK(pairing(a, a) == -1);
        CHECK(pairing(a, canonical_class(s.pair.n)) == -1);
    }
}
