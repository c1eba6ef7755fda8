#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace anticyc {

using Int = mpz_class;
using Rat = mpq_class;

/// A class in the unimodular lattice Z^{1,n} with basis (h, e_1, ..., e_n)
/// and pairing diag(+1, -1, ..., -1). coords[0] is the h coefficient.
struct LatticeClass {
    std::vector<Int> coords;

    LatticeClass() = default;
    explicit LatticeClass(std::vector<Int> c) : coords(std::move(c)) {}
    LatticeClass(std::initializer_list<long> c) {
        coords.reserve(c.size());
        for (long v : c) coords.emplace_back(v);
    }

    int n() const { return static_cast<int>(coords.size()) - 1; }
    int dim() const { return static_cast<int>(coords.size()); }

    const Int& operator[](int i) const { return coords[i]; }
    Int& operator[](int i) { return coords[i]; }

    bool operator==(const LatticeClass& o) const { return coords == o.coords; }
    bool operator!=(const LatticeClass& o) const { return !(*this == o); }
    bool operator<(const LatticeClass& o) const { return coords < o.coords; }

    LatticeClass operator+(const LatticeClass& o) const;
    LatticeClass operator-(const LatticeClass& o) const;
    LatticeClass operator-() const;
    LatticeClass operator*(const Int& s) const;

    bool is_zero() const;
    /// gcd of all coordinates (0 for the zero class).
    Int content() const;

    std::string str() const;
};

/// h = (1, 0, ..., 0) in Z^{1,n}.
LatticeClass basis_h(int n);
/// e_i = (0, ..., 1, ..., 0), 1 <= i <= n.
LatticeClass basis_e(int n, int i);
LatticeClass zero_class(int n);

/// The intersection pairing u_0 v_0 - sum_{i>=1} u_i v_i.
Int pairing(const LatticeClass& u, const LatticeClass& v);

/// K = (-3, 1, ..., 1); K^2 = 9 - n.
LatticeClass canonical_class(int n);

/// Reflection r_beta(x) = x + <x, beta> beta for beta^2 = -2.
LatticeClass reflect(const LatticeClass& x, const LatticeClass& beta);

/// An integer matrix acting on coordinates of Z^{1,n}.
struct IntegerIsometry {
    // matrix[i][j]: row i, column j; image coords = matrix * coords.
    std::vector<std::vector<Int>> matrix;

    int dim() const { return static_cast<int>(matrix.size()); }
    LatticeClass apply(const LatticeClass& x) const;

    static IntegerIsometry identity(int dim);
    /// Matrix of reflection in beta (beta^2 = -2).
    static IntegerIsometry reflection(const LatticeClass& beta);

    IntegerIsometry compose(const IntegerIsometry& other) const;  // this after other
    IntegerIsometry inverse() const;  // valid for det = +-1 matrices

    /// Checks <Mu, Mv> = <u, v> on all basis vector pairs.
    bool preserves_pairing() const;
};

/// True iff <f(h), h> > 0, i.e. f maps C+ to C+.
bool preserves_positive_cone(const IntegerIsometry& f);

void require_same_dim(const LatticeClass& u, const LatticeClass& v);

}  // namespace anticyc
