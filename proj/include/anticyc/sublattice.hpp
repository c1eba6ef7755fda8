#pragma once

#include <optional>
#include <vector>

#include "anticyc/lattice.hpp"
#include "anticyc/linalg.hpp"

namespace anticyc {

/// A sublattice of Z^{1,n} given by a basis, with its Gram matrix.
struct SubLattice {
    int ambient_n = 0;
    std::vector<LatticeClass> basis;
    IMat gram;

    static SubLattice from_basis(int ambient_n, std::vector<LatticeClass> basis);

    int rank() const { return static_cast<int>(basis.size()); }

    /// Coordinates of x in this basis, if x lies in the rational span.
    std::optional<QVec> coords_of(const LatticeClass& x) const;
    /// Membership in the sublattice itself (integer coordinates).
    bool contains(const LatticeClass& x) const;

    LatticeClass from_coords(const std::vector<Int>& a) const;
    LatticeClass from_rational_coords(const QVec& a, Int* denom_out = nullptr) const;
};

/// Saturated basis of {x : <x, c> = 0 for all c in classes}, deterministic
/// (Hermite-reduced kernel of the pairing constraint matrix).
SubLattice orthogonal_complement(int ambient_n, const std::vector<LatticeClass>& classes);

struct DiscriminantGroup {
    std::vector<Int> invariant_factors;  // d_1 | d_2 | ..., each > 1
    // generator_lifts[k] = rational coordinates (in the sublattice basis) of a
    // lift of the k-th generator; d_k * lift lies in the sublattice.
    std::vector<QVec> generator_lifts;

    Int order() const;
};

/// Smith normal form of the Gram matrix; throws on degenerate Gram.
DiscriminantGroup discriminant_group(const SubLattice& L);

/// An isometry of a SubLattice, as a matrix on basis coordinates.
struct SubLatticeIsometry {
    IMat matrix;  // rank x rank, image coords = matrix * coords
    bool preserves_gram(const SubLattice& L) const;
};

/// True iff A(g) - g lies in the sublattice for every discriminant generator
/// lift g. Throws if A is not an isometry of L.
bool acts_trivially_on_discriminant(const SubLattice& L, const SubLatticeIsometry& A);

struct ExtendError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IntegralityFailure : ExtendError {
    using ExtendError::ExtendError;
};
struct DegenerateSpan : ExtendError {
    using ExtendError::ExtendError;
};

/// Extends an isometry A of L (the orthogonal complement of fixed_classes)
/// to the unique integral isometry of Z^{1,n} acting as A on L and fixing
/// each class in fixed_classes. Throws IntegralityFailure if the rational
/// extension is not integral, DegenerateSpan if the fixed classes span a
/// degenerate sublattice.
IntegerIsometry extend_isometry(const SubLattice& L, const SubLatticeIsometry& A,
                                const std::vector<LatticeClass>& fixed_classes);

}  // namespace anticyc
