#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anticyc/pair.hpp"

namespace anticyc {

enum class Effectiveness { Effective, NotEffective, SpanOfD, Undecided };
std::string effectiveness_name(Effectiveness e);

/// A numerical exceptional class: cls^2 = <cls, K> = -1.
struct NumExcClass {
    LatticeClass cls;
    Effectiveness effectiveness = Effectiveness::Undecided;
};

/// Oriented wall W^normal = {x : <x, normal> = 0}, preferred side <x, normal> >= 0.
struct Wall {
    LatticeClass normal;
};

/// Walls coincide iff the normals are Q-proportional.
bool wall_equal(const Wall& a, const Wall& b);
/// Same test restricted to a sublattice: compares the linear forms
/// <normal, .> on the sublattice basis. Distinct ambient normals can cut
/// the same wall of the sublattice.
bool wall_equal(const Wall& a, const Wall& b, const SubLattice& context);

enum class VerdictStatus { Proven, Refuted, Undecided };
std::string verdict_name(VerdictStatus s);

struct BoundedVerdict {
    VerdictStatus status = VerdictStatus::Undecided;
    Int bound = 0;                        // enumeration bound used
    std::optional<LatticeClass> witness;  // for Refuted: the violated class
    std::string detail;
};

struct NefResult {
    LatticeClass h;    // integral, <h, G_j> = 0 for all j
    QVec multipliers;  // r_i >= 0 with (seed + sum r_i G_i) . G_j = 0
    Int scale;         // h = scale * (seed + sum r_i G_i)
};

/// Orthogonal projection of an ample seed away from a negative definite
/// configuration, cleared to an integral class.
NefResult construct_nef(const LatticeClass& ample_seed,
                        const std::vector<LatticeClass>& config);

/// All x in Z^{1,n} with x^2 = square, <x,K> = k_pairing, |<x,h>| <= bound,
/// in lexicographic coordinate order.
std::vector<LatticeClass> classes_by_invariants(int n, const Int& square,
                                                const Int& k_pairing, const Int& bound);

/// All alpha in Z^{1,n} with alpha^2 = <alpha,K> = -1 and |<alpha,h>| <= bound,
/// in lexicographic coordinate order.
std::vector<LatticeClass> numexc_classes(int n, const Int& bound);

/// Effectiveness of a numerical exceptional class under the pair's regime.
/// nef_certificate: caller-asserted nef class H; with <H,D> > 0 it decides
/// the fallback regime fully, with <H,D> = 0 it decides only strict signs.
Effectiveness classify_effectiveness(const CyclePair& pair, const LatticeClass& alpha,
                                     const PairClassification& regime,
                                     const std::optional<LatticeClass>& nef_certificate = std::nullopt);

std::vector<NumExcClass> enumerate_numexc(
    const CyclePair& pair, const Int& bound,
    const std::optional<PairClassification>& regime = std::nullopt,
    const std::optional<LatticeClass>& nef_certificate = std::nullopt);

/// Bounded membership test for the generic ample cone: checks x^2 > 0,
/// <x,h> > 0, <x,D_i> >= 0, and <x,alpha> >= 0 against every Effective
/// enumerated class. Promoted to Proven when the regime gives a complete
/// effectiveness rule and the computed violator degree bound is <= bound.
BoundedVerdict in_generic_ample_cone(
    const CyclePair& pair, const LatticeClass& x, const Int& bound,
    const std::optional<PairClassification>& regime = std::nullopt,
    const std::optional<LatticeClass>& nef_certificate = std::nullopt);

/// As above plus <x, delta> >= 0 for every declared -2 class.
BoundedVerdict in_actual_ample_cone(
    const CyclePair& pair, const LatticeClass& x, const Int& bound,
    const std::optional<PairClassification>& regime = std::nullopt,
    const std::optional<LatticeClass>& nef_certificate = std::nullopt);

struct StepLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChamberReduction {
    LatticeClass reduced;
    std::vector<int> word;  // indices into declared_minus_two, in application order
};

/// Reflects x into the chamber <x, delta> >= 0 for all declared -2 classes,
/// always using the lowest-index violated one. Throws StepLimit after
/// max_steps reflections.
ChamberReduction chamber_reduce(const CyclePair& pair, const LatticeClass& x, int max_steps);

/// Generators used by the degree-descent reduction on Z^{1,10}:
/// e_1 - e_2, ..., e_9 - e_10, h - e_1 - e_2 - e_3.
std::vector<LatticeClass> noether_generators();

struct NoetherResult {
    std::vector<int> word;  // generator indices, in application order
    LatticeClass result;    // always 3h - e_1 - ... - e_9
};

/// Reduces a primitive isotropic class of positive degree on Z^{1,10} to
/// f = 3h - sum_{1..9} e_i by sorting swaps and degree descent.
NoetherResult noether_reduce(const LatticeClass& lambda0);

struct DuvalResult {
    Int k;
    LatticeClass e;  // numerical exceptional; k(D + e) + e = alpha
};

/// Decomposition alpha = k(D + e) + e on the 10-point pair with D = -K:
/// lambda = alpha - K is isotropic, lambda = (k+1) lambda0 with lambda0
/// primitive, and e = lambda0 + K.
DuvalResult duval_decompose(const CyclePair& pair, const LatticeClass& alpha);

}  // namespace anticyc
