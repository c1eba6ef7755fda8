#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anticyc/lattice.hpp"
#include "anticyc/sublattice.hpp"

namespace anticyc {

struct BlowupStep {
    enum class Kind { Corner, Interior };
    Kind kind;
    int index;  // edge index for corner, component index for interior
};

/// An anticanonical cycle pair (Y, D) at lattice level.
struct CyclePair {
    int n = 0;  // blowup count; ambient lattice is Z^{1,n}
    std::vector<LatticeClass> components;  // [D_1 .. D_r] in cycle order
    bool orientation = true;               // stored, unused by computations
    std::vector<LatticeClass> declared_minus_two;  // Delta_Y; empty = generic
    std::vector<BlowupStep> history;               // optional builder record

    int r() const { return static_cast<int>(components.size()); }
    LatticeClass anticanonical() const { return -canonical_class(n); }
    Int k_square() const { return Int(9) - n; }

    /// Intersection matrix (D_i . D_j).
    IMat component_gram() const;
    /// Lambda(Y,D) = orthogonal complement of the [D_i].
    SubLattice lambda() const;
};

/// Checks every CyclePair invariant; empty result = valid.
std::vector<std::string> validate(const CyclePair& pair);
void require_valid(const CyclePair& pair);

enum class Regime { NotNegativeDefinite, KSquareMinusOne, Distinguished, BoundedOnly };

std::string regime_name(Regime r);

/// Certificate for an R-distinguished point (Def of R-distinguished).
struct DistinguishedCertificate {
    std::vector<LatticeClass> roots_used;  // span a codim-1 negative definite V
    LatticeClass x;                        // generator of V-perp cap Lambda, x^2 > 0
    IMat gram_v;
};

struct PairClassification {
    bool negative_definite = false;
    Int k_square = 0;
    bool has_minus_one_component = false;
    Regime regime = Regime::BoundedOnly;
    std::optional<DistinguishedCertificate> distinguished;
};

/// Regime classification. extra_verified_roots are caller-asserted members of
/// R (in addition to declared -2-curve classes lying in Lambda); bound limits
/// the distinguished-point search. Implemented with the roots machinery.
PairClassification classify(const CyclePair& pair,
                            const std::vector<LatticeClass>& extra_verified_roots = {},
                            const Int& bound = 8);

/// Blow up an interior point of a component: the component class loses the
/// new exceptional class, r is unchanged.
CyclePair interior_blowup(const CyclePair& pair, int component_index,
                          LatticeClass* new_exceptional = nullptr);

/// Blow up the corner between components edge_index and edge_index+1 (mod r);
/// the new exceptional class is inserted between them and r grows by 1.
/// For r = 1 the nodal class splits into the standard 2-cycle.
CyclePair corner_blowup(const CyclePair& pair, int edge_index,
                        LatticeClass* new_exceptional = nullptr);

/// Contract a (-1)-class identified with the last basis vector e_n, either by
/// the recorded history (cls must be e_n and history nonempty) or by a
/// supplied ambient isometry mapping cls to e_n. Undoes a corner blowup
/// (r drops by 1) or an interior one (r unchanged).
CyclePair contract_minus_one(const CyclePair& pair, const LatticeClass& cls,
                             const std::optional<IntegerIsometry>& witness = std::nullopt);

/// Spec-shaped wrapper: contract cycle component component_index.
CyclePair contract_minus_one_component(const CyclePair& pair, int component_index,
                                       const std::optional<IntegerIsometry>& witness = std::nullopt);

}  // namespace anticyc
