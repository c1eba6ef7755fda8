#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anticyc/pair.hpp"

using namespace anticyc;

namespace {

CyclePair base_pair() {
    CyclePair p;
    p.n = 0;
    p.components.push_back(LatticeClass{std::vector<Int>{3}});
    return p;
}

}  // namespace

TEST_CASE("base pair is valid and anticanonical") {
    CyclePair p = base_pair();
    CHECK(validate(p).empty());
    CHECK(p.r() == 1);
    CHECK(p.components[0] == p.anticanonical());
    CHECK(p.k_square() == 9);
}

TEST_CASE("interior blowup keeps r and validity") {
    CyclePair p = base_pair();
    for (int i = 0; i < 4; ++i) {
        LatticeClass e;
        p = interior_blowup(p, 0, &e);
        CHECK(e == basis_e(p.n, p.n));
        CHECK(validate(p).empty());
        CHECK(p.r() == 1);
    }
    CHECK(p.n == 4);
    LatticeClass sum = zero_class(p.n);
    for (const auto& d : p.components) sum = sum + d;
    CHECK(sum == p.anticanonical());
}

TEST_CASE("corner blowup grows the cycle") {
    CyclePair p = base_pair();
    p = corner_blowup(p, 0);
    CHECK(p.r() == 2);
    CHECK(validate(p).empty());
    CHECK(pairing(p.components[0], p.components[1]) == 2);  // 2-cycle double edge
    p = corner_blowup(p, 0);
    CHECK(p.r() == 3);
    CHECK(validate(p).empty());
    for (int i = 0; i < 3; ++i) {
        Int self = pairing(p.components[i], p.components[i]);
        CHECK(self <= -1);
    }
    // adjacency around the 3-cycle
    CHECK(pairing(p.components[0], p.components[1]) == 1);
    CHECK(pairing(p.components[1], p.components[2]) == 1);
    CHECK(pairing(p.components[2], p.components[0]) == 1);
}

TEST_CASE("validate flags broken invariants") {
    CyclePair p = base_pair();
    p = corner_blowup(p, 0);
    p.components[0] = p.components[0] + basis_e(p.n, 1);
    CHECK_FALSE(validate(p).empty());
    CHECK_THROWS(require_valid(p));

    CyclePair q = base_pair();
    q = interior_blowup(q, 0);
    q.declared_minus_two.push_back(basis_e(q.n, 1));  // square -1, not -2
    CHECK_FALSE(validate(q).empty());
}

TEST_CASE("history replays and contraction undoes blowups") {
    CyclePair p = base_pair();
    p = corner_blowup(p, 0);
    p = interior_blowup(p, 1);
    REQUIRE(p.history.size() == 2);
    CHECK(p.history[0].kind == BlowupStep::Kind::Corner);
    CHECK(p.history[1].kind == BlowupStep::Kind::Interior);

    CyclePair q = contract_minus_one(p, basis_e(p.n, p.n));
    CHECK(q.n == p.n - 1);
    CHECK(validate(q).empty());
    CHECK(q.r() == p.r());  // interior contraction keeps the cycle length
    CyclePair q2 = contract_minus_one(q, basis_e(q.n, q.n));
    CHECK(q2.r() == q.r() - 1);  // corner contraction drops a component
    CHECK(validate(q2).empty());
    CHECK(q2.n == 0);
}

TEST_CASE("contraction through an isometry witness") {
    CyclePair p = base_pair();
    LatticeClass e;
    p = interior_blowup(p, 0, &e);
    p = interior_blowup(p, 0);
    // swap e_1 and e_2 so that e_1 becomes the last basis vector
    IntegerIsometry swap = IntegerIsometry::identity(3);
    std::swap(swap.matrix[1], swap.matrix[2]);
    CyclePair q = contract_minus_one(p, basis_e(2, 1), swap);
    CHECK(q.n == 1);
    CHECK(validate(q).empty());
}

TEST_CASE("lambda is orthogonal to every component") {
    CyclePair p = base_pair();
    for (int i = 0; i < 3; ++i) p = corner_blowup(p, 0);
    p = interior_blowup(p, 1);
    SubLattice lam = p.lambda();
    CHECK(lam.rank() == p.n + 1 - p.r());
    for (const auto& b : lam.basis)
        for (const auto& d : p.components) CHECK(pairing(b, d) == 0);
}
