#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anticyc/linalg.hpp"
#include "anticyc/sublattice.hpp"

namespace anticyc {

struct PellSolution {
    Int x, y;  // x^2 - D y^2 = +1 or -1
};

/// Continued fraction expansion of sqrt(D) for nonsquare D > 1:
/// leading term a0 and the periodic part.
struct SqrtContinuedFraction {
    Int a0;
    std::vector<Int> period;
};

SqrtContinuedFraction sqrt_continued_fraction(const Int& d);

/// Fundamental solution of x^2 - D y^2 = 1 (x, y > 0), D nonsquare > 1.
PellSolution pell_fundamental(const Int& d);

/// x^k + y^k sqrt(D) = (x + y sqrt(D))^k.
PellSolution pell_power(const Int& d, const PellSolution& base, unsigned k);

struct NegativePellResult {
    bool solvable = false;
    std::optional<PellSolution> fundamental;  // x^2 - D y^2 = -1, minimal positive
    std::string certificate;  // reason when unsolvable
};

/// Decides x^2 - D y^2 = -1. For D = 3 (mod 4) reports the mod-4
/// obstruction; otherwise decides by the parity of the continued
/// fraction period.
NegativePellResult pell_negative(const Int& d);

/// The isometry of a rank-2 lattice with Gram diag(A, -B), A > 0 > -B,
/// induced by a solution of x^2 - D y^2 = 1 where D = s^2 B / A for an
/// integer s = sqrt(A D / B). In basis coordinates:
///   M = [[a, s B b / A], [s b, a]].
/// Throws if the scaling is not integral or M fails M^T G M = G.
SubLatticeIsometry unit_action(const IMat& gram, const Int& d, const PellSolution& sol);

/// All (n, m) with |n|, |m| <= bound representing c in the given symmetric
/// 2x2 form: g00 n^2 + 2 g01 n m + g11 m^2 = c.
std::vector<std::pair<Int, Int>> represent(const IMat& gram, const Int& c, const Int& bound);

}  // namespace anticyc
