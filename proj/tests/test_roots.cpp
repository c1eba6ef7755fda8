#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "anticyc/roots.hpp"
#include "anticyc/scenarios.hpp"

using namespace anticyc;

TEST_CASE("minus-two classes via the K-orthogonal path") {
    Scenario s = build_scenario("nodal_cubic_N", {10});
    SubLattice lam = s.pair.lambda();  // all of K-perp
    auto m2 = minus_two_classes(lam, 3);
    CHECK(std::is_sorted(m2.begin(), m2.end()));
    for (const auto& b : m2) {
        CHECK(pairing(b, b) == -2);
        CHECK(lam.contains(b));
        CHECK(abs(pairing(b, basis_h(10))) <= 3);
    }
    // closed under negation
    for (const auto& b : m2) CHECK(std::binary_search(m2.begin(), m2.end(), -b));
    // spot members: e_i - e_j and h - e_i - e_j - e_k
    CHECK(std::binary_search(m2.begin(), m2.end(), basis_e(10, 1) - basis_e(10, 2)));
    LatticeClass r = basis_h(10) - basis_e(10, 1) - basis_e(10, 2) - basis_e(10, 3);
    CHECK(std::binary_search(m2.begin(), m2.end(), r));
}

TEST_CASE("minus-two classes via the box-scan path") {
    Scenario s = build_scenario("ex43");
    SubLattice lam = s.pair.lambda();  // rank 2, not K-orthogonal basis-wise
    auto m2 = minus_two_classes(lam, 15);
    CHECK(m2.size() == 4);
    const LatticeClass& g2 = s.named.at("G2");
    const LatticeClass& beta = s.named.at("beta");
    CHECK(std::binary_search(m2.begin(), m2.end(), g2));
    CHECK(std::binary_search(m2.begin(), m2.end(), -g2));
    CHECK(std::binary_search(m2.begin(), m2.end(), beta));
    CHECK(std::binary_search(m2.begin(), m2.end(), -beta));
}

TEST_CASE("roots are automatic off the negative definite locus") {
    // 5-point pair: K^2 = 4 > 0
    Scenario s = build_scenario("remark45_n", {2});
    PairClassification cls = classify(s.pair);
    REQUIRE(cls.regime == Regime::NotNegativeDefinite);
    SubLattice lam = s.pair.lambda();
    for (const auto& b : minus_two_classes(lam, 4)) {
        RootVerdict v = is_root(s.pair, b, 4, cls);
        CHECK(v.status == RootStatus::InR);
    }
}

TEST_CASE("reflection orbit of an A2 chain") {
    std::vector<LatticeClass> chain = {basis_e(4, 1) - basis_e(4, 2),
                                       basis_e(4, 2) - basis_e(4, 3)};
    OrbitResult orbit = looijenga_orbit(chain, std::nullopt, 5);
    CHECK(orbit.stabilized);
    CHECK(orbit.elements.size() == 6);  // positive and negative A2 roots
    CHECK(std::binary_search(orbit.elements.begin(), orbit.elements.end(),
                             basis_e(4, 1) - basis_e(4, 3)));
    // positivity certificate: v = -3 b1 - 2 b2 pairs positively with both roots
    OrbitResult orbit2 =
        looijenga_orbit(chain, std::vector<Int>{Int(-3), Int(-2)}, 5);
    CHECK(orbit2.elements == orbit.elements);
    CHECK_THROWS(looijenga_orbit(chain, std::vector<Int>{Int(1), Int(1)}, 5));
}

TEST_CASE("distinguished search on the declared chain") {
    Scenario s = build_scenario("family_kN", {2, 3});
    auto cert = find_R_distinguished(s.pair, s.pair.declared_minus_two, 8);
    REQUIRE(cert);
    CHECK(pairing(cert->x, cert->x) > 0);
    for (const auto& d : s.pair.components) CHECK(pairing(cert->x, d) == 0);
    for (const auto& r : cert->roots_used) {
        CHECK(pairing(cert->x, r) == 0);
        CHECK(std::find(s.pair.declared_minus_two.begin(), s.pair.declared_minus_two.end(),
                        r) != s.pair.declared_minus_two.end());
    }
}

TEST_CASE("identity isometry preserves the cone") {
    Scenario s = build_scenario("nodal_cubic_N", {10});
    IntegerIsometry id = IntegerIsometry::identity(11);
    IsometryReport rep = check_isometry(s.pair, s.pair, id, 4);
    CHECK(rep.components_match);
    CHECK(rep.positive_cone);
    CHECK(rep.lambda_preserved);
    CHECK(rep.cone == ConeVerdict::ConePreserved);
    CHECK(rep.roots_consistent);
}

TEST_CASE("dimension mismatch and non-isometries are rejected") {
    Scenario s = build_scenario("nodal_cubic_N", {10});
    CHECK_THROWS(check_isometry(s.pair, s.pair, IntegerIsometry::identity(5), 4));
    IntegerIsometry bad = IntegerIsometry::identity(11);
    bad.matrix[0][1] = 1;  // shear, does not preserve the pairing
    CHECK_THROWS(check_isometry(s.pair, s.pair, bad, 4));
}

TEST_CASE("cone verdict catches a moved positive cone") {
    Scenario s = build_scenario("nodal_cubic_N", {10});
    IntegerIsometry neg = IntegerIsometry::identity(11);
    for (auto& row : neg.matrix)
        for (auto& v : row) v = -v;
    // -1 is an isometry but swaps the two components of the light cone
    IsometryReport rep = check_isometry(s.pair, s.pair, neg, 4);
    CHECK_FALSE(rep.positive_cone);
    CHECK(rep.cone == ConeVerdict::ConeNotPreserved);
}
