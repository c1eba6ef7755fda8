#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "anticyc/cones.hpp"
#include "anticyc/scenarios.hpp"

using namespace anticyc;

namespace {

// box-scan oracle for classes_by_invariants on small lattices
std::vector<LatticeClass> oracle_classes(int n, long square, long k_pairing, long bound) {
    std::vector<LatticeClass> out;
    long cmax = bound + 2;
    std::vector<long> c(n, -cmax);
    for (long d = -bound; d <= bound; ++d) {
        std::fill(c.begin(), c.end(), -cmax);
        while (true) {
            long sq = d * d, kp = -3 * d;
            for (long v : c) {
                sq -= v * v;
                kp -= v;
            }
            if (sq == square && kp == k_pairing) {
                std::vector<Int> coords;
                coords.emplace_back(d);
                for (long v : c) coords.emplace_back(v);
                out.emplace_back(std::move(coords));
            }
            int i = n - 1;
            while (i >= 0 && c[i] == cmax) c[i--] = -cmax;
            if (i < 0) break;
            ++c[i];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("class enumeration agrees with a box scan") {
    for (long bound : {2L, 3L}) {
        auto got = classes_by_invariants(3, -1, -1, bound);
        auto want = oracle_classes(3, -1, -1, bound);
        CHECK(got == want);
        auto got2 = classes_by_invariants(3, -2, 0, bound);
        auto want2 = oracle_classes(3, -2, 0, bound);
        CHECK(got2 == want2);
    }
    // output is sorted and duplicate-free
    auto all = numexc_classes(4, 4);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& x : all) {
        CHECK(pairing(x, x) == -1);
        CHECK(pairing(x, canonical_class(4)) == -1);
    }
}

TEST_CASE("wall comparison") {
    LatticeClass a{1, -2, 0};
    CHECK(wall_equal(Wall{a}, Wall{a * Int(3)}));
    CHECK(wall_equal(Wall{a}, Wall{-a}));
    CHECK_FALSE(wall_equal(Wall{a}, Wall{{1, 0, -2}}));
    CHECK_FALSE(wall_equal(Wall{zero_class(2)}, Wall{a}));
}

TEST_CASE("nef construction postconditions") {
    Scenario s = build_scenario("ex42");
    for (long a : {1L, 2L, 7L}) {
        NefResult res = construct_nef(basis_h(s.pair.n) * Int(a), s.pair.components);
        for (const auto& d : s.pair.components) CHECK(pairing(res.h, d) == 0);
        CHECK(pairing(res.h, res.h) > 0);
        CHECK(res.scale > 0);
        for (const auto& r : res.multipliers) CHECK(r >= 0);
    }
    // a positive-square component is not a negative definite configuration
    CHECK_THROWS(construct_nef(basis_h(0), std::vector<LatticeClass>{basis_h(0) * Int(3)}));
}

TEST_CASE("effectiveness in the K^2 = -1 regime") {
    Scenario s = build_scenario("nodal_cubic_N", {10});
    PairClassification cls = classify(s.pair);
    REQUIRE(cls.regime == Regime::KSquareMinusOne);
    // exactly the classes of degree > -3 are effective
    for (const auto& alpha : numexc_classes(10, 5)) {
        Effectiveness e = classify_effectiveness(s.pair, alpha, cls);
        bool expected = pairing(alpha, basis_h(10)) + 3 > 0;
        CHECK((e == Effectiveness::Effective) == expected);
        CHECK((e == Effectiveness::NotEffective) == !expected);
    }
}

TEST_CASE("generic ample cone membership on the projective plane") {
    CyclePair p;
    p.n = 0;
    p.components.push_back(LatticeClass{std::vector<Int>{3}});
    BoundedVerdict v = in_generic_ample_cone(p, basis_h(0), 4);
    CHECK(v.status == VerdictStatus::Proven);
    BoundedVerdict w = in_generic_ample_cone(p, -basis_h(0), 4);
    CHECK(w.status == VerdictStatus::Refuted);
}

TEST_CASE("membership refutation carries a witness") {
    Scenario s = build_scenario("nodal_cubic_N", {10});
    // e_1 - e_2 pairs negatively with e_2, an effective exceptional class
    LatticeClass x = basis_h(10) * Int(100) + basis_e(10, 1) * Int(-99);
    BoundedVerdict v = in_generic_ample_cone(s.pair, basis_e(10, 1) - basis_e(10, 2), 4);
    CHECK(v.status == VerdictStatus::Refuted);
    (void)x;
}

TEST_CASE("actual cone adds declared walls") {
    Scenario s = build_scenario("family_kN", {2, 2});
    REQUIRE(s.pair.declared_minus_two.size() == 1);
    const LatticeClass& delta = s.pair.declared_minus_two[0];
    // any class pairing negatively with delta is outside the actual cone
    LatticeClass x = delta * Int(-1) + basis_h(s.pair.n) * Int(5);
    if (pairing(x, delta) < 0) {
        BoundedVerdict v = in_actual_ample_cone(s.pair, x, 4);
        CHECK(v.status == VerdictStatus::Refuted);
    }
}

TEST_CASE("chamber reduction lands in the chamber") {
    Scenario s = build_scenario("family_kN", {2, 3});
    LatticeClass x = basis_h(s.pair.n) * Int(7) - basis_e(s.pair.n, s.pair.n) * Int(3);
    ChamberReduction red = chamber_reduce(s.pair, x, 1000);
    for (const auto& d : s.pair.declared_minus_two) CHECK(pairing(red.reduced, d) >= 0);
    // replaying the word recovers the input
    LatticeClass y = red.reduced;
    for (auto it = red.word.rbegin(); it != red.word.rend(); ++it)
        y = reflect(y, s.pair.declared_minus_two[*it]);
    CHECK(y == x);
}

TEST_CASE("degree-descent reduction") {
    LatticeClass f = basis_h(10) * Int(3);
    for (int i = 1; i <= 9; ++i) f = f - basis_e(10, i);
    NoetherResult base = noether_reduce(f);
    CHECK(base.word.empty());
    CHECK(base.result == f);

    // a reflected copy reduces back
    LatticeClass g = reflect(f, basis_e(10, 9) - basis_e(10, 10));
    NoetherResult r = noether_reduce(g);
    CHECK(r.result == f);
    CHECK_FALSE(r.word.empty());

    CHECK_THROWS(noether_reduce(basis_h(10)));            // not isotropic
    CHECK_THROWS(noether_reduce(f * Int(2)));             // not primitive
    CHECK_THROWS(noether_reduce(-f));                     // wrong cone component
}

TEST_CASE("exceptional decomposition on the 10-point pair") {
    Scenario s = build_scenario("nodal_cubic_N", {10});
    LatticeClass f = basis_h(10) * Int(3);
    for (int i = 1; i <= 9; ++i) f = f - basis_e(10, i);
    for (long k : {0L, 1L, 2L, 5L}) {
        LatticeClass alpha = f * Int(k) + basis_e(10, 10);
        DuvalResult d = duval_decompose(s.pair, alpha);
        CHECK(d.k == k);
        LatticeClass rebuilt = (s.pair.components[0] + d.e) * d.k + d.e;
        CHECK(rebuilt == alpha);
    }
    CHECK_THROWS(duval_decompose(s.pair, canonical_class(10)));  // lambda = 0
}
