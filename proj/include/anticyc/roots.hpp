#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anticyc/cones.hpp"
#include "anticyc/pair.hpp"

namespace anticyc {

enum class RootStatus { InR, NotInR, UndecidedUpToBound };
std::string root_status_name(RootStatus s);

struct RootVerdict {
    LatticeClass beta;
    RootStatus status = RootStatus::UndecidedUpToBound;
    /// For NotInR: an Effective class alpha whose reflection r_beta(alpha)
    /// is provably NotEffective. Re-checkable by classify_effectiveness.
    std::optional<LatticeClass> witness;
    std::string rule;
};

/// All beta in L with beta^2 = -2 and |<beta, h>| <= bound, lexicographic.
/// When L is orthogonal to K the invariant-constrained ambient enumeration
/// is used; otherwise a coefficient box scan with dual-norm bounds.
std::vector<LatticeClass> minus_two_classes(const SubLattice& L, const Int& bound);

/// Decides whether beta belongs to the root set R of the pair, to the given
/// enumeration bound. Automatic in the non-negative-definite and the
/// K^2 = -1 regimes; otherwise witness search for a refutation, then the
/// declared-class orbit and the distinguished-point orthogonality routes
/// for a positive answer.
RootVerdict is_root(const CyclePair& pair, const LatticeClass& beta, const Int& bound,
                    const std::optional<PairClassification>& regime = std::nullopt,
                    const std::optional<LatticeClass>& nef_certificate = std::nullopt);

std::vector<RootVerdict> roots_up_to_bound(
    const CyclePair& pair, const Int& bound,
    const std::optional<LatticeClass>& nef_certificate = std::nullopt);

/// Searches subsets of verified_roots spanning a negative definite corank-1
/// sublattice of Lambda(pair) whose orthogonal complement in Lambda is
/// generated by a class of positive square. Returns that certificate, or
/// nothing if no subset works (rank-1 Lambda needs no roots at all).
std::optional<DistinguishedCertificate> find_R_distinguished(
    const CyclePair& pair, const std::vector<LatticeClass>& verified_roots,
    const Int& bound);

struct OrbitResult {
    std::vector<LatticeClass> elements;  // sorted lexicographically
    bool stabilized = true;  // false if the closure left the degree bound
};

/// Closure of the given -2 classes under reflections in themselves,
/// truncated at |<., h>| <= bound. The optional positivity vector n_i is
/// verified to satisfy (sum n_i beta_i) . beta_j > 0 for all j.
OrbitResult looijenga_orbit(const std::vector<LatticeClass>& basis,
                            const std::optional<std::vector<Int>>& positivity,
                            const Int& bound);

enum class ConeVerdict { ConePreserved, ConeNotPreserved, UndecidedUpToBound };
std::string cone_verdict_name(ConeVerdict v);

struct IsometryReport {
    bool components_match = false;
    bool positive_cone = false;
    bool lambda_preserved = false;
    ConeVerdict cone = ConeVerdict::UndecidedUpToBound;
    /// For ConeNotPreserved via search: Effective class with NotEffective image.
    std::optional<LatticeClass> witness;
    /// Probe route: membership verdict for f^{-1}(probe), carrying its own
    /// refutation witness when the probe demonstrates a moved cone point.
    std::optional<LatticeClass> probe;
    std::optional<BoundedVerdict> probe_verdict;
    /// No verified root maps to a provable non-root within the bound.
    bool roots_consistent = true;
    std::string rule;
};

/// Checks whether the isometry f carries the generic ample cone of pair to
/// that of pair2, to the given bound. probe: a caller-asserted member of the
/// source cone whose inverse image is tested for membership.
IsometryReport check_isometry(const CyclePair& pair, const CyclePair& pair2,
                              const IntegerIsometry& f, const Int& bound,
                              const std::optional<LatticeClass>& probe = std::nullopt,
                              const std::optional<LatticeClass>& nef_certificate = std::nullopt,
                              const std::optional<LatticeClass>& nef_certificate2 = std::nullopt);

}  // namespace anticyc
