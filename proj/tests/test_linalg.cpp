#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "anticyc/linalg.hpp"

using namespace anticyc;

namespace {

IMat random_imat(std::mt19937& rng, int rows, int cols, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> d(lo, hi);
    IMat a(rows, std::vector<Int>(cols));
    for (auto& row : a)
        for (auto& v : row) v = d(rng);
    return a;
}

Int det_naive3(const IMat& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

TEST_CASE("bareiss determinant vs cofactor expansion") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        IMat a = random_imat(rng, 3, 3);
        CHECK(det_bareiss(a) == det_naive3(a));
    }
    CHECK(det_bareiss(identity_imat(5)) == 1);
}

TEST_CASE("hermite normal form is canonical for the row space") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        IMat a = random_imat(rng, 3, 4, -5, 5);
        IMat h = hermite_normal_form(a);
        CHECK(hermite_normal_form(h) == h);
        // appending the original rows must not change the lattice
        IMat both = h;
        for (const auto& row : a) both.push_back(row);
        CHECK(hermite_normal_form(both) == h);
    }
}

TEST_CASE("smith normal form invariants") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + (trial % 2);
        IMat a = random_imat(rng, n, n, -7, 7);
        SmithResult s = smith_normal_form(a);
        CHECK(mul(mul(s.u, a), s.v) == s.s);
        Int du = det_bareiss(s.u), dv = det_bareiss(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        Int prod = 1;
        for (int i = 0; i < n; ++i) {
            CHECK(s.s[i][i] >= 0);
            if (i + 1 < n && s.s[i][i] != 0) CHECK(s.s[i + 1][i + 1] % s.s[i][i] == 0);
            prod *= s.s[i][i];
        }
        CHECK(prod == abs(det_bareiss(a)));
    }
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        IMat a = random_imat(rng, 2, 4, -4, 4);
        IMat k = kernel_basis(a);
        for (const auto& row : k)
            for (size_t i = 0; i < a.size(); ++i) {
                Int dot = 0;
                for (size_t j = 0; j < row.size(); ++j) dot += a[i][j] * row[j];
                CHECK(dot == 0);
            }
        // rank-nullity
        IMat ah = hermite_normal_form(a);
        CHECK(k.size() + ah.size() == 4);
    }
}

TEST_CASE("negative definiteness by principal minors") {
    CHECK(is_negative_definite({{-2, 1}, {1, -2}}));
    CHECK_FALSE(is_negative_definite({{-2, 2}, {2, -2}}));
    CHECK_FALSE(is_negative_definite({{1, 0}, {0, -1}}));
    CHECK(is_negative_definite({{-1}}));
}

TEST_CASE("rational solve and inverse round trips") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        IMat a = random_imat(rng, 3, 3, -5, 5);
        if (det_bareiss(a) == 0) continue;
        QVec b = {Rat(1), Rat(-2), Rat(3, 2)};
        auto x = solve_rational(a, b);
        REQUIRE(x);
        for (int i = 0; i < 3; ++i) {
            Rat dot = 0;
            for (int j = 0; j < 3; ++j) dot += Rat(a[i][j]) * (*x)[j];
            CHECK(dot == b[i]);
        }
        auto inv = inverse_rational(to_qmat(a));
        REQUIRE(inv);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rat dot = 0;
                for (int k = 0; k < 3; ++k) dot += Rat(a[i][k]) * (*inv)[k][j];
                CHECK(dot == (i == j ? 1 : 0));
            }
    }
    CHECK_FALSE(solve_rational({{1, 1}, {1, 1}}, {Rat(1), Rat(0)}));
    CHECK_FALSE(inverse_rational(to_qmat({{1, 1}, {1, 1}})));
}
